#include <doctest.h>

#include "oracles.hpp"
#include "schub/weyl.hpp"

using namespace schub;

namespace {

Permutation P(std::initializer_list<int> e) { return Permutation(std::vector<int>(e)); }
ParabolicSet S(int n, std::initializer_list<int> e) { return ParabolicSet(n, std::vector<int>(e)); }

}  // namespace

TEST_CASE("permutation validation and parsing") {
  CHECK_THROWS_AS(P({1, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(P({0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), PreconditionError);
  CHECK_THROWS_AS(Permutation::parse("3,3,1,2"), PreconditionError);
  CHECK_THROWS_AS(Permutation::parse("3,x,1"), PreconditionError);
  CHECK(Permutation::parse("3,4,1,2") == P({3, 4, 1, 2}));
  CHECK(P({3, 4, 1, 2}).to_string() == "3,4,1,2");
  CHECK(P({3, 4, 1, 2}).left_simple(2) == P({2, 4, 1, 3}));
  CHECK(P({3, 4, 1, 2}).right_simple(2) == P({3, 1, 4, 2}));
  CHECK(P({2, 3, 1}) * P({2, 1, 3}) == P({3, 2, 1}));
  CHECK(P({2, 3, 1}).inverse() == P({3, 1, 2}));
}

TEST_CASE("parabolic sets") {
  CHECK_THROWS_AS(S(4, {4}), PreconditionError);
  CHECK_THROWS_AS(S(4, {0}), PreconditionError);
  CHECK(ParabolicSet::parse(5, "3,1,3") == S(5, {1, 3}));
  CHECK(ParabolicSet::parse(5, "").empty());
  CHECK(ParabolicSet::maximal(5, 2) == S(5, {1, 3, 4}));
  CHECK(S(8, {1, 3, 4, 7}).complement() == S(8, {2, 5, 6}));
  CHECK(ParabolicSet::all_subsets(4).size() == 8);
}

TEST_CASE("length examples") {
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(P({3, 4, 1, 2})) == 4);
  CHECK(length(P({3, 2, 1})) == 3);
  CHECK(oracle::bfs_length(P({3, 4, 1, 2})) == 4);
  CHECK(oracle::bfs_length(P({3, 2, 1})) == 3);
}

TEST_CASE("length equals breadth-first word length for n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& [w, d] : oracle::bfs_lengths(n)) CHECK(length(w) == d);
}

TEST_CASE("bruhat examples") {
  CHECK(bruhat_leq(P({1, 2, 3}), P({3, 2, 1})));
  CHECK(bruhat_leq(P({2, 4, 1, 3}), P({3, 4, 1, 2})));
  CHECK_FALSE(bruhat_leq(P({3, 4, 1, 2}), P({2, 4, 1, 3})));
  CHECK(oracle::subword_leq(P({2, 4, 1, 3}), P({3, 4, 1, 2})));
  CHECK_THROWS_AS(bruhat_leq(P({1, 2}), P({1, 2, 3})), PreconditionError);
}

TEST_CASE("bruhat order agrees with the subword oracle for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = oracle::every_permutation(n);
    for (const auto& w : perms) {
      const auto below = oracle::subword_lower_set(w);
      for (const auto& u : perms) REQUIRE(bruhat_leq(u, w) == (below.count(u) > 0));
    }
  }
}

TEST_CASE("descent examples and oracle") {
  CHECK(descents(P({1, 2, 3}), Side::right).empty());
  CHECK(descents(P({3, 4, 1, 2}), Side::right) == S(4, {2}));
  CHECK(descents(P({3, 4, 1, 2}), Side::left) == S(4, {2}));
  for (const auto& w : oracle::every_permutation(5)) {
    for (int i = 1; i < 5; ++i) {
      CHECK(descents(w, Side::right).contains(i) == (oracle::inversions(w.right_simple(i)) < oracle::inversions(w)));
      CHECK(descents(w, Side::left).contains(i) == (oracle::inversions(w.left_simple(i)) < oracle::inversions(w)));
    }
  }
}

TEST_CASE("support examples and reduced-word oracle") {
  CHECK(support(Permutation::identity(4)).empty());
  CHECK(support(P({2, 1, 3})) == S(3, {1}));
  CHECK(support(P({3, 4, 1, 2})) == S(4, {1, 2, 3}));
  for (const auto& w : oracle::every_permutation(5)) {
    const auto word = oracle::reduced_word(w);
    CHECK(static_cast<int>(word.size()) == length(w));
    CHECK(oracle::word_product(5, word) == w);
    CHECK(support(w) == ParabolicSet(5, word));
  }
}

TEST_CASE("min_coset_rep examples") {
  for (const auto& J : ParabolicSet::all_subsets(4)) CHECK(min_coset_rep(Permutation::identity(4), J).is_identity());
  CHECK(min_coset_rep(P({3, 2, 1}), S(3, {1})) == P({2, 3, 1}));
  CHECK(min_coset_rep(P({3, 4, 1, 2}), S(4, {2})) == P({3, 1, 4, 2}));
  CHECK(oracle::coset_min(P({3, 2, 1}), S(3, {1})) == P({2, 3, 1}));
  CHECK(oracle::coset_min(P({3, 4, 1, 2}), S(4, {2})) == P({3, 1, 4, 2}));
}

TEST_CASE("min_coset_rep properties for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& J : ParabolicSet::all_subsets(n)) {
      for (const auto& w : oracle::every_permutation(n)) {
        const Permutation v = min_coset_rep(w, J);
        REQUIRE(v == oracle::coset_min(w, J));
        CHECK(in_quotient(v, J));
        CHECK(min_coset_rep(v, J) == v);
        CHECK(bruhat_leq(v, w));
        CHECK(length(w) == length(v) + length(v.inverse() * w));
      }
    }
  }
}

TEST_CASE("longest_element examples") {
  CHECK(longest_element(ParabolicSet::none(3)).is_identity());
  CHECK(longest_element(S(3, {1, 2})) == P({3, 2, 1}));
  CHECK(longest_element(S(6, {1, 3, 4, 5})) == P({2, 1, 6, 5, 4, 3}));
  for (const auto& J : ParabolicSet::all_subsets(5))
    CHECK(longest_element(J) == oracle::coset_max(Permutation::identity(5), J));
}

TEST_CASE("lower_covers examples") {
  CHECK(lower_covers(Permutation::identity(4), ParabolicSet::none(4)).empty());
  std::vector<Permutation> expected{P({1, 4, 3, 2}), P({2, 4, 1, 3}), P({3, 1, 4, 2}), P({3, 2, 1, 4})};
  CHECK(lower_covers(P({3, 4, 1, 2}), ParabolicSet::none(4)) == expected);
  CHECK_THROWS_AS(lower_covers(P({2, 1, 3}), S(3, {1})), PreconditionError);
}

TEST_CASE("lower_covers agree with exhaustive filtering for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& J : ParabolicSet::all_subsets(n)) {
      const auto quot = oracle::quotient(J);
      for (const auto& w : quot) {
        const auto below = oracle::subword_lower_set(w);
        std::vector<Permutation> brute;
        for (const auto& t : quot)
          if (below.count(t) && oracle::inversions(t) + 1 == oracle::inversions(w)) brute.push_back(t);
        REQUIRE(lower_covers(w, J) == brute);
        // Covers: nothing in W^J sits strictly between.
        for (const auto& t : brute)
          for (const auto& x : quot)
            CHECK_FALSE((x != t && x != w && bruhat_leq(t, x) && bruhat_leq(x, w)));
      }
    }
  }
}

TEST_CASE("the w = [2,4,1,3,5], J = {1,3,4} covers match brute force") {
  const auto J = S(5, {1, 3, 4});
  const auto w = P({2, 4, 1, 3, 5});
  std::vector<Permutation> brute;
  for (const auto& t : oracle::quotient(J))
    if (oracle::subword_leq(t, w) && oracle::inversions(t) == length(w) - 1) brute.push_back(t);
  CHECK(lower_covers(w, J) == brute);
  CHECK(brute == std::vector<Permutation>{P({1, 4, 2, 3, 5}), P({2, 3, 1, 4, 5})});
}

TEST_CASE("quotients and intervals match brute force") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& J : ParabolicSet::all_subsets(n)) {
      REQUIRE(quotient_elements(J) == oracle::quotient(J));
      for (const auto& w : quotient_elements(J)) {
        const auto counts = oracle::poincare_counts(w, J);
        CHECK(poincare_polynomial(w, J).coefficients() == std::vector<PoincarePolynomial::Coefficient>(counts.begin(), counts.end()));
      }
    }
  }
}

TEST_CASE("poincare examples") {
  CHECK(poincare_polynomial(Permutation::identity(3), ParabolicSet::none(3)) == PoincarePolynomial());
  const auto full = poincare_polynomial(P({3, 2, 1}), ParabolicSet::none(3));
  CHECK(full == PoincarePolynomial({1, 2, 2, 1}));
  CHECK(full.to_string() == "1+2q+2q^2+q^3");
  CHECK(poincare_polynomial(P({2, 3, 1}), S(3, {1})) == PoincarePolynomial({1, 1, 1}));
  CHECK_THROWS_AS(poincare_polynomial(P({2, 1, 3}), S(3, {1})), PreconditionError);
}

TEST_CASE("poincare polynomial of w0 factors into q-integers for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    PoincarePolynomial product;
    for (int k = 1; k <= n; ++k) product = product * PoincarePolynomial::q_integer(k);
    const auto w0 = longest_element(ParabolicSet::all(n));
    const auto p = poincare_polynomial(w0, ParabolicSet::none(n));
    CHECK(p == product);
    CHECK(p[0] == 1);
    CHECK(p[p.degree()] == 1);
    CHECK(p.degree() == length(w0));
  }
}

TEST_CASE("rank limit fails fast") {
  const int saved = rank_limit();
  set_rank_limit(4);
  CHECK_THROWS_AS(all_permutations(5), RankLimitError);
  CHECK_THROWS_AS(lower_interval(Permutation::identity(5), ParabolicSet::none(5)), RankLimitError);
  CHECK_NOTHROW(all_permutations(4));
  set_rank_limit(saved);
  CHECK(rank_limit() == kDefaultRankLimit);
}
