#include "schub/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <set>

namespace schub {

namespace {

std::atomic<int> g_rank_limit{kDefaultRankLimit};

void require_same_rank(const Permutation& w, const ParabolicSet& J) {
  if (w.size() != J.rank()) throw PreconditionError("rank mismatch between permutation and parabolic set");
}

void require_in_quotient(const Permutation& w, const ParabolicSet& J) {
  require_same_rank(w, J);
  if (!in_quotient(w, J))
    throw PreconditionError(w.to_string() + " is not a minimal coset representative for J = {" + J.to_string() + "}");
}

void sort_by_length_lex(std::vector<Permutation>& v) {
  std::vector<std::pair<int, Permutation>> keyed;
  keyed.reserve(v.size());
  for (auto& p : v) keyed.emplace_back(length(p), std::move(p));
  std::sort(keyed.begin(), keyed.end());
  v.clear();
  for (auto& [l, p] : keyed) v.push_back(std::move(p));
}

}  // namespace

int rank_limit() noexcept { return g_rank_limit.load(std::memory_order_relaxed); }

void set_rank_limit(int limit) {
  if (limit < 1) throw PreconditionError("rank limit must be positive");
  g_rank_limit.store(limit, std::memory_order_relaxed);
}

void check_rank_limit(int n) {
  if (n > rank_limit()) throw RankLimitError(n, rank_limit());
}

int length(const Permutation& w) {
  int count = 0;
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) count += w(i) > w(j);
  return count;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw PreconditionError("rank mismatch in Bruhat comparison");
  const int n = u.size();
  std::vector<int> pu, pw;
  pu.reserve(static_cast<std::size_t>(n));
  pw.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
    for (int i = 0; i < k; ++i)
      if (pu[static_cast<std::size_t>(i)] > pw[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

ParabolicSet descents(const Permutation& w, Side side) {
  const int n = w.size();
  std::vector<int> idx;
  if (side == Side::right) {
    for (int i = 1; i < n; ++i)
      if (w(i) > w(i + 1)) idx.push_back(i);
  } else {
    const Permutation inv = w.inverse();
    for (int i = 1; i < n; ++i)
      if (inv(i) > inv(i + 1)) idx.push_back(i);
  }
  return ParabolicSet(n, std::move(idx));
}

ParabolicSet support(const Permutation& w) {
  // s_i <= w iff some value among the first i positions exceeds i.
  const int n = w.size();
  std::vector<int> idx;
  int prefix_max = 0;
  for (int i = 1; i < n; ++i) {
    prefix_max = std::max(prefix_max, w(i));
    if (prefix_max > i) idx.push_back(i);
  }
  return ParabolicSet(n, std::move(idx));
}

bool in_quotient(const Permutation& w, const ParabolicSet& J) {
  require_same_rank(w, J);
  for (int j : J.indices())
    if (w(j) > w(j + 1)) return false;
  return true;
}

std::vector<std::vector<int>> position_blocks(const ParabolicSet& J) {
  std::vector<std::vector<int>> blocks{{1}};
  for (int i = 1; i < J.rank(); ++i) {
    if (J.contains(i))
      blocks.back().push_back(i + 1);
    else
      blocks.push_back({i + 1});
  }
  return blocks;
}

Permutation min_coset_rep(const Permutation& w, const ParabolicSet& J) {
  require_same_rank(w, J);
  std::vector<int> e(w.one_line().begin(), w.one_line().end());
  for (const auto& block : position_blocks(J)) {
    auto first = e.begin() + (block.front() - 1);
    std::sort(first, first + static_cast<std::ptrdiff_t>(block.size()));
  }
  return Permutation(std::move(e));
}

Permutation longest_element(const ParabolicSet& J) {
  std::vector<int> e(static_cast<std::size_t>(J.rank()));
  std::iota(e.begin(), e.end(), 1);
  for (const auto& block : position_blocks(J)) {
    auto first = e.begin() + (block.front() - 1);
    std::reverse(first, first + static_cast<std::ptrdiff_t>(block.size()));
  }
  return Permutation(std::move(e));
}

std::vector<Permutation> lower_covers(const Permutation& w, const ParabolicSet& J) {
  require_in_quotient(w, J);
  // Bruhat covers in S_n are w*(i j) with w(i) > w(j) and no position strictly
  // between carrying a value strictly between; W^J is graded by length, so
  // its covers are exactly those that stay inside W^J.
  const int n = w.size();
  std::vector<Permutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) < w(j)) continue;
      bool cover = true;
      for (int k = i + 1; k < j && cover; ++k) cover = !(w(j) < w(k) && w(k) < w(i));
      if (!cover) continue;
      Permutation tau = w.swap_positions(i, j);
      if (in_quotient(tau, J)) out.push_back(std::move(tau));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> lower_interval(const Permutation& w, const ParabolicSet& J) {
  require_in_quotient(w, J);
  check_rank_limit(w.size());
  std::set<Permutation> seen{w};
  std::deque<Permutation> frontier{w};
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (auto& c : lower_covers(x, J))
      if (seen.insert(c).second) frontier.push_back(std::move(c));
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  sort_by_length_lex(out);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw PreconditionError("rank must be positive");
  check_rank_limit(n);
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::vector<Permutation> quotient_elements(const ParabolicSet& J) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(J.rank()))
    if (in_quotient(w, J)) out.push_back(std::move(w));
  return out;
}

PoincarePolynomial poincare_polynomial(const Permutation& w, const ParabolicSet& J) {
  std::vector<PoincarePolynomial::Coefficient> counts(static_cast<std::size_t>(length(w)) + 1, 0);
  for (const auto& x : lower_interval(w, J)) ++counts[static_cast<std::size_t>(length(x))];
  return PoincarePolynomial(std::move(counts));
}

}  // namespace schub
