#include "doctest.h"
#include "oracles/gen.hpp"
#include "trophyp/lp.hpp"

using namespace trophyp;

namespace {
LinearConstraint con(std::initializer_list<long> a, Relation r, long b) {
  LinearConstraint c;
  for (long x : a) c.coeffs.emplace_back(x);
  c.rel = r;
  c.rhs = b;
  return c;
}
}  // namespace

TEST_CASE("small LPs") {
  // max x + y, x + 2y <= 4, 3x + y <= 6, x, y >= 0 -> (8/5, 6/5), value 14/5
  std::vector<LinearConstraint> cs{con({1, 2}, Relation::LessEq, 4), con({3, 1}, Relation::LessEq, 6),
                                   con({1, 0}, Relation::GreaterEq, 0), con({0, 1}, Relation::GreaterEq, 0)};
  const RationalVector obj{1, 1};
  auto r = solve_lp(2, cs, obj);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(14, 5));
  CHECK(r.point[0] == Rational(8, 5));
  CHECK(r.point[1] == Rational(6, 5));
}

TEST_CASE("infeasible, unbounded and free variables") {
  std::vector<LinearConstraint> inf{con({1}, Relation::GreaterEq, 2), con({1}, Relation::LessEq, 1)};
  CHECK(solve_lp(1, inf).status == LpStatus::Infeasible);
  std::vector<LinearConstraint> unb{con({1}, Relation::GreaterEq, -3)};
  const RationalVector obj{1};
  CHECK(solve_lp(1, unb, obj).status == LpStatus::Unbounded);
  const RationalVector obj_neg{-1};
  auto r = solve_lp(1, unb, obj_neg);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.point[0] == -3);
  std::vector<LinearConstraint> eq{con({1, 1}, Relation::Equal, -5), con({1, -1}, Relation::Equal, 1)};
  auto e = solve_lp(2, eq);
  REQUIRE(e.status == LpStatus::Optimal);
  CHECK(e.point[0] == -2);
  CHECK(e.point[1] == -3);
}

TEST_CASE("redundant equalities and degenerate vertices") {
  std::vector<LinearConstraint> cs{con({1, 1}, Relation::Equal, 2), con({2, 2}, Relation::Equal, 4),
                                   con({1, 0}, Relation::GreaterEq, 0), con({0, 1}, Relation::GreaterEq, 0),
                                   con({1, 0}, Relation::LessEq, 2), con({1, -1}, Relation::LessEq, 2)};
  const RationalVector obj{1, 0};
  auto r = solve_lp(2, cs, obj);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 2);
}

TEST_CASE("property: optimal points are feasible and beat random feasible points") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nv = static_cast<std::size_t>(rng.uniform(1, 4));
    // Box -3 <= x_i <= 3 plus random cuts through a known interior point 0.
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < nv; ++i) {
      LinearConstraint lo, hi;
      lo.coeffs.assign(nv, 0);
      hi.coeffs.assign(nv, 0);
      lo.coeffs[i] = 1;
      hi.coeffs[i] = 1;
      lo.rel = Relation::GreaterEq;
      lo.rhs = -3;
      hi.rel = Relation::LessEq;
      hi.rhs = 3;
      cs.push_back(lo);
      cs.push_back(hi);
    }
    const int cuts = static_cast<int>(rng.uniform(0, 4));
    for (int k = 0; k < cuts; ++k) {
      LinearConstraint c;
      c.coeffs = gen::vector(rng, nv, 3, 2);
      c.rel = Relation::LessEq;
      c.rhs = Rational(rng.uniform(0, 5));
      cs.push_back(c);
    }
    const RationalVector obj = gen::vector(rng, nv, 4, 3);
    auto r = solve_lp(nv, cs, obj);
    REQUIRE(r.status == LpStatus::Optimal);
    for (const auto& c : cs) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < nv; ++i) lhs += c.coeffs[i] * r.point[i];
      if (c.rel == Relation::LessEq) REQUIRE(lhs <= c.rhs);
      if (c.rel == Relation::GreaterEq) REQUIRE(lhs >= c.rhs);
    }
    // integer grid points in the box
    for (int s = 0; s < 30; ++s) {
      RationalVector x(nv);
      for (auto& xi : x) xi = Rational(rng.uniform(-3, 3));
      bool feasible = true;
      for (const auto& c : cs) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < nv; ++i) lhs += c.coeffs[i] * x[i];
        if (c.rel == Relation::LessEq && lhs > c.rhs) feasible = false;
        if (c.rel == Relation::GreaterEq && lhs < c.rhs) feasible = false;
      }
      if (!feasible) continue;
      Rational val = 0;
      for (std::size_t i = 0; i < nv; ++i) val += obj[i] * x[i];
      REQUIRE(val <= r.value);
    }
  }
}
