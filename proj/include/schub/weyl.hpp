#pragma once

#include <vector>

#include "schub/errors.hpp"
#include "schub/parabolic.hpp"
#include "schub/permutation.hpp"
#include "schub/poincare.hpp"

// Weyl-group machinery for S_n: lengths, Bruhat order, descents, parabolic
// quotients W^J and rank-generating functions of lower intervals.
//
// W^J is realized as {v : v(j) < v(j+1) for all j in J}, the minimal length
// representatives of the left cosets v W_J.

namespace schub {

inline constexpr int kDefaultRankLimit = 8;

/// Largest rank accepted by the brute-force enumerations below. Process-wide;
/// set it once at startup, before any concurrent use.
int rank_limit() noexcept;
void set_rank_limit(int limit);

/// Throws RankLimitError when n exceeds rank_limit().
void check_rank_limit(int n);

/// Inversion count.
int length(const Permutation& w);

/// Bruhat order through the sorted-prefix (tableau) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

enum class Side { left, right };

/// right: {i : w(i) > w(i+1)}; left: {i : i+1 appears before i in w}.
ParabolicSet descents(const Permutation& w, Side side);

/// {i : s_i <= w}, the simple reflections occurring in any reduced word.
ParabolicSet support(const Permutation& w);

/// True when w has no right descent in J.
bool in_quotient(const Permutation& w, const ParabolicSet& J);

/// Unique element of w W_J without right descents in J.
Permutation min_coset_rep(const Permutation& w, const ParabolicSet& J);

/// w_{0,J}: the longest element of W_J (reverses each J-block of positions).
Permutation longest_element(const ParabolicSet& J);

/// Maximal runs of consecutive positions linked by J: position i and i+1
/// share a block exactly when i is in J.
std::vector<std::vector<int>> position_blocks(const ParabolicSet& J);

/// Elements tau of W^J with tau < w and length(tau) = length(w) - 1, sorted.
std::vector<Permutation> lower_covers(const Permutation& w, const ParabolicSet& J);

/// {x in W^J : x <= w}, sorted by length then one-line notation.
std::vector<Permutation> lower_interval(const Permutation& w, const ParabolicSet& J);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// W^J in lexicographic order.
std::vector<Permutation> quotient_elements(const ParabolicSet& J);

/// Rank-generating function of {x in W^J : x <= w} by length.
PoincarePolynomial poincare_polynomial(const Permutation& w, const ParabolicSet& J);

}  // namespace schub
