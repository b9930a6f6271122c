#include <doctest.h>

#include "oracles.hpp"
#include "schub/bp.hpp"
#include "schub/weyl.hpp"

using namespace schub;

namespace {

Permutation P(std::initializer_list<int> e) { return Permutation(std::vector<int>(e)); }
ParabolicSet S(int n, std::initializer_list<int> e) { return ParabolicSet(n, std::vector<int>(e)); }

template <typename Fn>
void for_each_decomposition(int n, Fn&& fn) {
  const auto subsets = ParabolicSet::all_subsets(n);
  for (const auto& jp : subsets)
    for (const auto& k : subsets)
      if (jp.is_subset_of(k))
        for (const auto& w : quotient_elements(jp)) fn(w, jp, k);
}

/// Independent maximality test: u against the brute-force W_K ∩ W^{J_P} ∩ [e, w].
bool maximality_oracle(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
  const Permutation v = oracle::coset_min(w, k);
  const Permutation u = v.inverse() * w;
  const auto below = oracle::subword_lower_set(w);
  const auto wk = oracle::parabolic_subgroup(k);
  for (const auto& x : wk) {
    if (x == u || !below.count(x) || oracle::coset_min(x, jp) != x) continue;
    if (oracle::subword_leq(u, x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parabolic decomposition examples") {
  const auto id = Permutation::identity(4);
  auto [v0, u0] = parabolic_decompose(id, ParabolicSet::none(4), S(4, {1, 2}));
  CHECK(v0.is_identity());
  CHECK(u0.is_identity());

  auto [v, u] = parabolic_decompose(P({3, 2, 1}), ParabolicSet::none(3), S(3, {1}));
  CHECK(v == P({2, 3, 1}));
  CHECK(u == P({2, 1, 3}));

  const auto w = P({3, 4, 1, 2});
  const auto k = S(4, {1, 2});
  auto [v2, u2] = parabolic_decompose(w, ParabolicSet::none(4), k);
  CHECK(v2 == oracle::coset_min(w, k));
  CHECK(v2 * u2 == w);
  CHECK(v2 == P({1, 3, 4, 2}));
  CHECK(u2 == P({2, 3, 1, 4}));

  CHECK_THROWS_AS(parabolic_decompose(P({2, 1, 3}), S(3, {1}), S(3, {1, 2})), PreconditionError);
  CHECK_THROWS_AS(parabolic_decompose(P({1, 2, 3}), S(3, {1}), S(3, {2})), PreconditionError);
}

TEST_CASE("decompositions always exist with additive lengths (n <= 5)") {
  for (int n = 1; n <= 5; ++n)
    for_each_decomposition(n, [](const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
      auto [v, u] = parabolic_decompose(w, jp, k);
      CHECK(v * u == w);
      CHECK(length(w) == length(v) + length(u));
      CHECK(in_quotient(v, k));
      CHECK(in_quotient(u, jp));
      CHECK(support(u).is_subset_of(k));
    });
}

TEST_CASE("S3 worked example: all three characterizations hold") {
  const auto w = P({3, 2, 1});
  const auto none = ParabolicSet::none(3);
  const auto k = S(3, {1});
  CHECK(is_bp_maximality(w, none, k));
  CHECK(is_bp_support(w, none, k));
  CHECK(poincare_factorizes(w, none, k));
  const auto lhs = poincare_polynomial(w, none);
  const auto rhs = poincare_polynomial(P({2, 3, 1}), k) * poincare_polynomial(P({2, 1, 3}), none);
  CHECK(lhs == PoincarePolynomial({1, 2, 2, 1}));
  CHECK(rhs == PoincarePolynomial({1, 1, 1}) * PoincarePolynomial({1, 1}));
  CHECK(lhs == rhs);

  const auto id = Permutation::identity(3);
  CHECK(is_bp_maximality(id, none, k));
  CHECK(is_bp_support(id, none, k));
  CHECK(poincare_factorizes(id, none, k));
}

TEST_CASE("a non-BP decomposition in S4 fails every characterization") {
  const auto none = ParabolicSet::none(4);
  std::optional<BPDecomposition> found;
  for (const auto& k : ParabolicSet::all_subsets(4)) {
    for (const auto& w : all_permutations(4)) {
      if (!poincare_factorizes(w, none, k)) {
        found = bp_decompose(w, none, k);
        break;
      }
    }
    if (found) break;
  }
  REQUIRE(found.has_value());
  CHECK_FALSE(found->maximality);
  CHECK_FALSE(found->support);
  CHECK_FALSE(found->poincare);
  // 3412 over K = {1,3} is the classic example.
  const auto b = bp_decompose(P({3, 4, 1, 2}), none, S(4, {1, 3}));
  CHECK(b.v == P({3, 4, 1, 2}));
  CHECK(b.u.is_identity());
  CHECK_FALSE(b.is_bp());
  CHECK(b.characterizations_agree());
}

TEST_CASE("maximality agrees with the brute-force maximality oracle (n <= 4)") {
  for (int n = 1; n <= 4; ++n)
    for_each_decomposition(n, [](const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
      REQUIRE(is_bp_maximality(w, jp, k) == maximality_oracle(w, jp, k));
    });
}

TEST_CASE("three characterizations agree (n <= 4)") {
  for (int n = 1; n <= 4; ++n)
    for_each_decomposition(n, [](const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
      const auto b = bp_decompose(w, jp, k);
      REQUIRE(b.characterizations_agree());
    });
}

TEST_CASE("divisor projection examples") {
  const auto none = ParabolicSet::none(3);
  const auto w = P({3, 2, 1});
  const auto k = S(3, {1});
  const auto onto = project_divisor(P({2, 3, 1}), w, none, k);
  CHECK(onto.kind == ProjectionKind::onto);
  CHECK(onto.image == P({2, 3, 1}));
  CHECK(onto.right_simple == 1);
  CHECK_FALSE(onto.right_simple_outside_k);

  const auto down = project_divisor(P({3, 1, 2}), w, none, k);
  CHECK(down.kind == ProjectionKind::divisor);
  CHECK(down.image == P({1, 3, 2}));
  CHECK(down.right_simple == 2);
  CHECK(down.right_simple_outside_k);

  // K containing the support collapses everything onto v.
  const auto all = ParabolicSet::all(4);
  const auto w4 = P({3, 4, 1, 2});
  for (const auto& tau : lower_covers(w4, ParabolicSet::none(4))) {
    const auto p = project_divisor(tau, w4, ParabolicSet::none(4), all);
    CHECK(p.kind == ProjectionKind::onto);
    CHECK(p.image.is_identity());
  }
  CHECK_THROWS_AS(project_divisor(P({1, 2, 3}), w, none, k), PreconditionError);
}

TEST_CASE("off BP decompositions the image can drop by more than one") {
  const auto none = ParabolicSet::none(3);
  const auto p = project_divisor(P({2, 1, 3}), P({2, 3, 1}), none, S(3, {1}));
  CHECK(p.kind == ProjectionKind::neither);
  CHECK_FALSE(poincare_factorizes(P({2, 3, 1}), none, S(3, {1})));
}

TEST_CASE("projection dichotomy on BP decompositions (n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    const auto none = ParabolicSet::none(n);
    for (const auto& k : ParabolicSet::all_subsets(n))
      for (const auto& w : all_permutations(n)) {
        if (!poincare_factorizes(w, none, k)) continue;
        for (const auto& tau : lower_covers(w, none)) {
          const auto p = project_divisor(tau, w, none, k);
          CHECK(p.kind != ProjectionKind::neither);
          if (p.right_simple_outside_k) CHECK(p.kind != ProjectionKind::onto);
        }
      }
  }
}

TEST_CASE("BP chain search matches palindromicity (n <= 5)") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& jp : ParabolicSet::all_subsets(n))
      for (const auto& w : quotient_elements(jp))
        CHECK(rationally_smooth_by_bp_chain(w, jp) == poincare_polynomial(w, jp).is_palindromic());
}

TEST_CASE("toroidal transport through a BP projection") {
  // X_321 fibres over P^2 = X_312; the line <e1,e2> is a color through the L-fixed point.
  const auto none = ParabolicSet::none(3);
  const auto t = toroidal_transport(P({3, 2, 1}), none, 1, S(3, {2}));
  CHECK(t.stable);
  CHECK(t.smooth);
  CHECK(t.decomposition.v == P({3, 1, 2}));
  CHECK(t.decomposition.is_bp());
  REQUIRE(t.base.has_value());
  CHECK(t.base->verdict == Verdict::fails);
  CHECK(t.verdict == TransportVerdict::certified_non_toroidal);

  // The Grassmann instance 261345 is singular, so no smooth BP lift reaches it.
  const auto I = S(6, {1, 3, 4, 5});
  const auto lift = toroidal_transport(P({2, 6, 5, 4, 3, 1}), ParabolicSet::none(6), 2, I);
  CHECK(lift.stable);
  CHECK(lift.smooth);
  CHECK_FALSE(lift.decomposition.is_bp());
  CHECK(lift.verdict == TransportVerdict::not_applicable);

  // Unstable input is outside the statement.
  const auto u = toroidal_transport(P({2, 4, 1, 3}), ParabolicSet::none(4), 2, S(4, {2}));
  CHECK(u.verdict == TransportVerdict::not_applicable);
}

TEST_CASE("certified transports always come from failing smooth BP data (n <= 4)") {
  for (int n = 2; n <= 4; ++n) {
    const auto none = ParabolicSet::none(n);
    for (int d = 1; d < n; ++d)
      for (const auto& I : ParabolicSet::all_subsets(n))
        for (const auto& w : all_permutations(n)) {
          const auto t = toroidal_transport(w, none, d, I);
          if (t.verdict == TransportVerdict::not_applicable) {
            CHECK_FALSE((t.stable && t.smooth && t.decomposition.is_bp()));
            continue;
          }
          REQUIRE(t.base.has_value());
          CHECK(is_stable(t.decomposition.v, ParabolicSet::maximal(n, d), I));
          CHECK((t.verdict == TransportVerdict::certified_non_toroidal) == (t.base->verdict == Verdict::fails));
        }
  }
}
