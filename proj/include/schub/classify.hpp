#pragma once

#include <optional>
#include <string>
#include <vector>

// Horospherical Picard-number-one data: the three families of triples
// (Γ, α, β) whose two-orbit embedding is homogeneous, with the dimensions of
// the embedding and of its two closed orbits.

namespace schub {

enum class CaseTag { a, b, c };
enum class DynkinType { A, D };

/// One parameterized family, as a template with its constraints.
struct CaseFamily {
  CaseTag tag;
  DynkinType type;
  std::string triple;       ///< e.g. "(A_m, alpha_1, alpha_m)"
  std::string constraint;   ///< e.g. "m >= 2"
  std::string space;        ///< e.g. "SO_{2m+2}/P(omega_1)"
};

std::vector<CaseFamily> pasquier_cases();

/// An instantiated member of a family.
class PasquierCase {
 public:
  /// Throws PreconditionError when (m, i) violates the family's constraints.
  PasquierCase(CaseTag tag, int m, std::optional<int> i = std::nullopt);

  CaseTag tag() const noexcept { return tag_; }
  DynkinType type() const noexcept { return tag_ == CaseTag::c ? DynkinType::D : DynkinType::A; }
  int m() const noexcept { return m_; }
  std::optional<int> i() const noexcept { return i_; }

  std::string triple() const;
  std::string homogeneous_space() const;

 private:
  CaseTag tag_;
  int m_;
  std::optional<int> i_;
};

/// Validity of a parameterization without constructing it.
bool is_valid_case(CaseTag tag, int m, std::optional<int> i = std::nullopt);

struct CaseDimensions {
  long long embedding;  ///< dim X^1
  long long orbit_a;    ///< closed orbit through [v_α]
  long long orbit_b;    ///< closed orbit through [v_β]
  friend bool operator==(const CaseDimensions&, const CaseDimensions&) = default;
};

CaseDimensions case_dimensions(const PasquierCase& c);

/// Both closed orbits have codimension at least two, so no divisor is L-stable.
bool codim_at_least_two(const PasquierCase& c);

struct CodimSweep {
  int max_m;
  long long cases_checked;
  long long failures;
};

/// Evaluates codim_at_least_two on every valid parameterization with m <= max_m.
CodimSweep sweep_codim(int max_m);

std::string to_string(CaseTag tag);
std::string to_string(DynkinType type);

}  // namespace schub
