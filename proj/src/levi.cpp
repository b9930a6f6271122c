#include "schub/levi.hpp"

#include <algorithm>

#include "schub/errors.hpp"
#include "schub/weyl.hpp"

namespace schub {

namespace {

void require_levi_rank(int n, const ParabolicSet& I) {
  if (I.rank() != n) throw PreconditionError("rank mismatch between Levi roots and permutation");
}

std::vector<Permutation> maximal_elements(const std::vector<Permutation>& elems) {
  std::vector<Permutation> out;
  for (const auto& x : elems) {
    bool dominated = false;
    for (const auto& y : elems) {
      if (!(x == y) && bruhat_leq(x, y)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(x);
  }
  return out;
}

}  // namespace

LeviDescriptor levi_blocks(const ParabolicSet& I) {
  // Same partition as the J-blocks of positions: i and i+1 share a block iff i is in I.
  return LeviDescriptor{I, position_blocks(I)};
}

bool is_stable(const Permutation& theta, const ParabolicSet& J, const ParabolicSet& I) {
  require_levi_rank(theta.size(), I);
  if (!in_quotient(theta, J))
    throw PreconditionError(theta.to_string() + " is not in W^J for J = {" + J.to_string() + "}");
  const int len = length(theta);
  for (int i : I.indices())
    if (length(min_coset_rep(theta.left_simple(i), J)) > len) return false;
  return true;
}

bool is_degree1_head(const GrassmannSchubert& theta, const ParabolicSet& I) {
  require_levi_rank(theta.rank(), I);
  const auto cols = theta.columns();
  for (const auto& block : levi_blocks(I).blocks) {
    // Count the block members that are columns; they must be the top ones.
    int count = 0;
    for (int v : block) count += std::binary_search(cols.begin(), cols.end(), v);
    for (int k = 0; k < count; ++k) {
      const int v = block[block.size() - 1 - static_cast<std::size_t>(k)];
      if (!std::binary_search(cols.begin(), cols.end(), v)) return false;
    }
  }
  return true;
}

bool is_degree1_head(const Permutation& theta, int d, const ParabolicSet& I) {
  return is_degree1_head(GrassmannSchubert(d, theta), I);
}

HeadReport heads_below(const Permutation& tau, const ParabolicSet& J, const ParabolicSet& I) {
  require_levi_rank(tau.size(), I);
  HeadReport report;
  for (auto& x : lower_interval(tau, J))
    if (is_stable(x, J, I)) report.heads.push_back(std::move(x));
  if (report.heads.empty()) return report;

  std::vector<Permutation> minima;
  for (const auto& x : report.heads) {
    bool minimal = std::none_of(report.heads.begin(), report.heads.end(),
                                [&](const Permutation& y) { return !(x == y) && bruhat_leq(y, x); });
    if (minimal) minima.push_back(x);
  }
  if (minima.size() != 1) throw std::logic_error("head set below " + tau.to_string() + " has no unique minimum");
  report.minimal_head = minima.front();

  std::vector<Permutation> proper;
  for (const auto& x : report.heads)
    if (!(x == tau)) proper.push_back(x);
  report.maximal_proper_heads = maximal_elements(proper);
  std::sort(report.maximal_proper_heads.begin(), report.maximal_proper_heads.end());
  return report;
}

bool contains_l_orbit(const Permutation& tau, const ParabolicSet& J, const ParabolicSet& I) {
  return !heads_below(tau, J, I).heads.empty();
}

Permutation minimal_head(const ParabolicSet& J, const ParabolicSet& I) {
  if (J.rank() != I.rank()) throw PreconditionError("rank mismatch between parabolic and Levi roots");
  return min_coset_rep(longest_element(I), J);
}

ParabolicSet l_max(const Permutation& w, const ParabolicSet& J) {
  const int n = w.size();
  std::vector<int> roots;
  for (int i = 1; i < n; ++i)
    if (is_stable(w, J, ParabolicSet(n, {i}))) roots.push_back(i);
  return ParabolicSet(n, std::move(roots));
}

std::vector<Permutation> boundary(const Permutation& w, const ParabolicSet& J, const ParabolicSet& I) {
  if (!is_stable(w, J, I))
    throw PreconditionError(w.to_string() + " is not stable under the Levi with roots {" + I.to_string() + "}");
  return heads_below(w, J, I).maximal_proper_heads;
}

}  // namespace schub
