#include "doctest.h"
#include "oracles/brute.hpp"
#include "oracles/gen.hpp"
#include "trophyp/symmetry.hpp"

using namespace trophyp;

namespace {

ExactMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> r;
  for (const auto& row : rows) {
    RationalVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return ExactMatrix::from_rows(r);
}

SignedPermutation random_signed(gen::Rng& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (auto& s : signs) s = rng.coin() ? 1 : -1;
  return SignedPermutation::make(perm, signs);
}

// Literal preservation check with the exhaustive varbar.
bool preserves_literal(const SignedPermutation& phi, int c) {
  for (const auto& p : all_nonzero_sign_patterns(phi.n)) {
    if (oracle::varbar_exhaustive(p.signs) < c && oracle::varbar_exhaustive(phi.apply(p).signs) >= c) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generators act as displayed") {
  const RationalVector abc{1, 2, 3};
  CHECK(cyc(1, 3).apply(abc) == RationalVector{3, 1, 2});
  CHECK(cyc(2, 3).apply(abc) == RationalVector{-3, 1, 2});
  CHECK(rev(3).apply(abc) == RationalVector{3, 2, 1});
  CHECK(neg(3).apply(abc) == RationalVector{-1, -2, -3});
  CHECK_THROWS(SignedPermutation::make({1, 1}, {1, 1}));
  CHECK_THROWS(SignedPermutation::make({1, 2}, {1, 0}));
}

TEST_CASE("group laws") {
  gen::Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 6));
    const auto a = random_signed(rng, n), b = random_signed(rng, n), c = random_signed(rng, n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()) == SignedPermutation::identity(n));
    CHECK(compose(a.inverse(), a) == SignedPermutation::identity(n));
    const auto x = gen::vector(rng, static_cast<std::size_t>(n));
    CHECK(compose(a, b).apply(x) == a.apply(b.apply(x)));
  }
}

TEST_CASE("cyc orders") {
  for (int n = 2; n <= 7; ++n) {
    for (int c = 1; c < n; ++c) {
      const auto g = cyc(c, n);
      CHECK(g.order() == (c % 2 == 1 ? n : 2 * n));
      SignedPermutation p = SignedPermutation::identity(n);
      for (int k = 0; k < n; ++k) p = compose(p, g);
      CHECK(p == (c % 2 == 1 ? SignedPermutation::identity(n) : neg(n)));
    }
  }
}

TEST_CASE("threshold preservation matches the literal check") {
  CHECK(preserves_threshold(neg(4), 2));
  CHECK(preserves_threshold(SignedPermutation::identity(4), 2));
  const auto swap12 = SignedPermutation::make({2, 1, 3, 4}, {1, 1, 1, 1});
  CHECK_FALSE(preserves_threshold(swap12, 2));
  gen::Rng rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    const int c = static_cast<int>(rng.uniform(1, n - 1));
    const auto phi = random_signed(rng, n);
    CHECK(preserves_threshold(phi, c) == preserves_literal(phi, c));
  }
  for (int n = 3; n <= 6; ++n) {
    for (int c = 1; c < n; ++c) {
      CHECK(preserves_threshold(cyc(c, n), c));
      CHECK(preserves_threshold(rev(n), c));
    }
  }
}

TEST_CASE("preserver subgroup orders") {
  for (int n = 4; n <= 6; ++n) {
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    for (int c = 1; c < n; ++c) {
      const auto rep = preserver_subgroup(n, c);
      const std::size_t expect = (c == 1 || c == n - 1) ? static_cast<std::size_t>(2 * fact) : static_cast<std::size_t>(4 * n);
      CHECK(rep.order == expect);
      CHECK(rep.generator_match);
    }
  }
  const auto odd = preserver_subgroup(6, 3);
  CHECK(odd.element_orders.count(12) == 0);
  const auto even = preserver_subgroup(6, 2);
  CHECK(even.element_orders.at(12) > 0);
  const auto threaded = preserver_subgroup(6, 2, 3);
  CHECK(threaded.order == even.order);
  CHECK(threaded.element_orders == even.element_orders);
}

TEST_CASE("linear preservers") {
  CHECK(linear_map_preserves(ExactMatrix::identity(3), 2).preserves);
  gen::Rng rng(4);
  const auto v = gen::positive_vandermonde(rng, 2, 4);
  CHECK(linear_map_preserves(v, 2).preserves);
  // diag(1, -1) alone has a single nonzero 2x2 minor; the third column adds both signs
  CHECK(linear_map_preserves(int_matrix({{1, 0, 0}, {0, -1, 0}}), 2).preserves);
  const auto bad = int_matrix({{1, 0, 1}, {0, -1, 1}});
  const auto rep = linear_map_preserves(bad, 2);
  CHECK_FALSE(rep.preserves);
  CHECK(rep.positive.has_value());
  CHECK(rep.negative.has_value());
  CHECK_THROWS(linear_map_preserves(int_matrix({{1, 1}, {2, 2}}), 1));
}

TEST_CASE("Cauchy-Binet consistency") {
  gen::Rng rng(6);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 3));
    const std::size_t n = c + static_cast<std::size_t>(rng.uniform(1, 3));
    const std::size_t m = c + static_cast<std::size_t>(rng.uniform(0, n - c));
    const ExactMatrix mm = gen::full_rank(rng, m, n, [](gen::Rng& r, std::size_t a, std::size_t b) {
      // products of positive Vandermondes stay totally nonnegative
      return gen::positive_vandermonde(r, a, b);
    });
    if (!linear_map_preserves(mm, static_cast<int>(c)).preserves) continue;
    ++tested;
    const ExactMatrix b = gen::positive_vandermonde(rng, c, n);  // rows span L in Gr+(c, n)
    const ExactMatrix image = b * mm.transpose();                 // rows span T(L)
    CHECK(grassmannian_class(image) == GrassClass::Positive);
  }
  CHECK(tested > 10);
}

TEST_CASE("toric exemplar") {
  const auto a = int_matrix({{1, -1, -1, 1, 1}});
  const auto v = toric_positively_hyperbolic(a);
  REQUIRE(v.positively_hyperbolic);
  CHECK(v.lambda == std::vector<int>{1, 1, -1, -1, 1});
  CHECK(v.lambda_from_rule);
  CHECK(toric_sample_check(v.reduced, v.lambda, 1000, 0).violations == 0);
  const auto tm = toric_algebraic_matroid(a);
  CHECK(tm.matroid.rank() == 1);
  CHECK(tm.positroid == std::optional<bool>(true));
}

TEST_CASE("toric negatives and edge cases") {
  const auto crossing = toric_positively_hyperbolic(int_matrix({{1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK_FALSE(crossing.positively_hyperbolic);
  CHECK(crossing.reason == "row supports cross");
  const auto twos = toric_positively_hyperbolic(int_matrix({{1, 2, 0}}));
  CHECK_FALSE(twos.positively_hyperbolic);
  CHECK(toric_positively_hyperbolic(int_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}})).positively_hyperbolic);
  // a GL_2(Q) disguise of a block matrix
  const auto mixed = toric_positively_hyperbolic(int_matrix({{1, 1, 1, 1}, {1, 1, -1, -1}}));
  CHECK(mixed.positively_hyperbolic);
  CHECK_THROWS(toric_positively_hyperbolic(int_matrix({{1, 1}, {2, 2}})));
  const auto tm = toric_algebraic_matroid(int_matrix({{1, 1, 0, 0}, {0, 0, 1, -1}}));
  CHECK(tm.positroid == std::optional<bool>(true));
  CHECK(num_components(tm.matroid) == 2);
}

TEST_CASE("lambda rule on random non-crossing block matrices") {
  gen::Rng rng(12);
  int rule_hits = 0, total = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 10));
    // random non-crossing assignment: nested intervals by a stack
    std::vector<int> row(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    int rows = 0;
    for (int j = 0; j < n; ++j) {
      const long roll = rng.uniform(0, 9);
      if (roll < 2) continue;  // zero column
      if (roll < 5 || stack.empty()) {
        stack.push_back(rows++);
      } else if (roll < 7 && stack.size() > 1) {
        stack.pop_back();
      }
      row[j] = stack.back();
    }
    if (rows == 0) continue;
    ExactMatrix a(static_cast<std::size_t>(rows), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      if (row[j] >= 0) a(static_cast<std::size_t>(row[j]), static_cast<std::size_t>(j)) = rng.coin() ? 1 : -1;
    }
    const auto v = toric_positively_hyperbolic(a);
    ++total;
    CHECK(v.positively_hyperbolic);
    rule_hits += v.lambda_from_rule;
    if (v.positively_hyperbolic) CHECK(toric_sample_check(v.reduced, v.lambda, 40, 1).violations == 0);
  }
  CHECK(rule_hits == total);
}
