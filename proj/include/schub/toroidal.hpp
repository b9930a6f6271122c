#pragma once

#include <optional>
#include <vector>

#include "schub/grassmann.hpp"
#include "schub/levi.hpp"

namespace schub {

/// Stability of one Schubert divisor of an L_I-stable Grassmann Schubert variety.
struct DivisorStability {
  GrassmannSchubert divisor;
  int run;    ///< 1-based index ℓ of the run whose first entry was lowered
  int start;  ///< a_ℓ
  bool stable;
};

/// Per divisor: stable iff a_ℓ - 1 lies in I^c. Requires x to be I-stable.
/// The identity has no divisors and yields an empty list.
std::vector<DivisorStability> divisor_stability(const GrassmannSchubert& x, const ParabolicSet& I);

enum class Criterion {
  stable_root,  ///< a_ℓ - 1 in I^c: the divisor is L_I-stable
  no_head,      ///< a_ℓ - 1 not in I^c and no L_I-stable subvariety below it
  violated,     ///< the divisor is a color containing an L_I-orbit
};

struct DivisorRecord {
  GrassmannSchubert divisor;
  int run;
  bool stable;
  Criterion criterion;
  std::optional<Permutation> witness;  ///< a head contained in a violating divisor
};

/// Only necessary conditions exist, so there is no "toroidal" verdict.
enum class Verdict { passes_necessary, fails };

struct ToroidalReport {
  GrassmannSchubert subject;
  LeviDescriptor levi;
  std::vector<DivisorRecord> divisors;
  Verdict verdict;
};

/// Checks every Schubert divisor of an I-stable x against the two toroidal
/// criteria; any violation certifies that x is not a toroidal L_I-variety.
ToroidalReport toroidal_necessary(const GrassmannSchubert& x, const ParabolicSet& I);

/// For smooth-form x: the only L_max-head below w is w itself.
bool lmax_unique_head_check(const GrassmannSchubert& x);

/// For x not of smooth form: no Schubert divisor is L_max-stable and every
/// proper L_max-stable Schubert subvariety has codimension at least two.
bool no_stable_divisor_check(const GrassmannSchubert& x);

}  // namespace schub
