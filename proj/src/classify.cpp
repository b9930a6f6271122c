#include "schub/classify.hpp"

#include "schub/errors.hpp"

namespace schub {

namespace {

long long binom2(long long m) { return m * (m - 1) / 2; }

}  // namespace

std::vector<CaseFamily> pasquier_cases() {
  return {
      {CaseTag::a, DynkinType::A, "(A_m, alpha_1, alpha_m)", "m >= 2", "SO_{2m+2}/P(omega_1)"},
      {CaseTag::b, DynkinType::A, "(A_m, alpha_i, alpha_{i+1})", "m >= 3, 1 <= i <= m-1", "Gr(i+1, m+2)"},
      {CaseTag::c, DynkinType::D, "(D_m, alpha_{m-1}, alpha_m)", "m >= 4", "Spin(2m+1)/P(omega_m)"},
  };
}

bool is_valid_case(CaseTag tag, int m, std::optional<int> i) {
  switch (tag) {
    case CaseTag::a:
      return m >= 2 && !i;
    case CaseTag::b:
      return m >= 3 && i && *i >= 1 && *i <= m - 1;
    case CaseTag::c:
      return m >= 4 && !i;
  }
  return false;
}

PasquierCase::PasquierCase(CaseTag tag, int m, std::optional<int> i) : tag_(tag), m_(m), i_(i) {
  if (!is_valid_case(tag, m, i)) {
    std::string params = "m=" + std::to_string(m);
    if (i) params += ", i=" + std::to_string(*i);
    throw PreconditionError("invalid parameters for case (" + to_string(tag) + "): " + params);
  }
}

std::string PasquierCase::triple() const {
  const std::string m = std::to_string(m_);
  switch (tag_) {
    case CaseTag::a:
      return "(A_" + m + ", alpha_1, alpha_" + m + ")";
    case CaseTag::b:
      return "(A_" + m + ", alpha_" + std::to_string(*i_) + ", alpha_" + std::to_string(*i_ + 1) + ")";
    case CaseTag::c:
      return "(D_" + m + ", alpha_" + std::to_string(m_ - 1) + ", alpha_" + m + ")";
  }
  return {};
}

std::string PasquierCase::homogeneous_space() const {
  switch (tag_) {
    case CaseTag::a:
      return "SO_" + std::to_string(2 * m_ + 2) + "/P(omega_1)";
    case CaseTag::b:
      return "Gr(" + std::to_string(*i_ + 1) + "," + std::to_string(m_ + 2) + ")";
    case CaseTag::c:
      return "Spin(" + std::to_string(2 * m_ + 1) + ")/P(omega_" + std::to_string(m_) + ")";
  }
  return {};
}

CaseDimensions case_dimensions(const PasquierCase& c) {
  const long long m = c.m();
  switch (c.tag()) {
    case CaseTag::a:
      // Quadric in P(C^{m+1} ⊕ (C^{m+1})^*); closed orbits are two copies of P^m.
      return {2 * m, m, m};
    case CaseTag::b: {
      // Gr(i+1, m+2) with closed orbits Gr(i, m+1) and Gr(i+1, m+1).
      const long long i = *c.i();
      return {(m - i + 1) * (i + 1), (m - i + 1) * i, (m - i) * (i + 1)};
    }
    case CaseTag::c:
      // Spinor variety; both closed orbits are even orthogonal Grassmannians.
      return {binom2(m + 1), binom2(m), binom2(m)};
  }
  return {};
}

bool codim_at_least_two(const PasquierCase& c) {
  const auto dims = case_dimensions(c);
  return dims.orbit_a <= dims.embedding - 2 && dims.orbit_b <= dims.embedding - 2;
}

CodimSweep sweep_codim(int max_m) {
  CodimSweep sweep{max_m, 0, 0};
  auto visit = [&](const PasquierCase& c) {
    ++sweep.cases_checked;
    if (!codim_at_least_two(c)) ++sweep.failures;
  };
  for (int m = 2; m <= max_m; ++m) {
    visit(PasquierCase(CaseTag::a, m));
    if (m >= 3)
      for (int i = 1; i <= m - 1; ++i) visit(PasquierCase(CaseTag::b, m, i));
    if (m >= 4) visit(PasquierCase(CaseTag::c, m));
  }
  return sweep;
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::a:
      return "a";
    case CaseTag::b:
      return "b";
    case CaseTag::c:
      return "c";
  }
  return "?";
}

std::string to_string(DynkinType type) { return type == DynkinType::A ? "A" : "D"; }

}  // namespace schub
