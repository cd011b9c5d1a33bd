#include <algorithm>

#include "doctest.h"
#include "oracles/gen.hpp"
#include "oracles/hull2.hpp"
#include "trophyp/catalog.hpp"
#include "trophyp/stability.hpp"

using namespace trophyp;

namespace {

RationalVector ints(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LatticePolynomial poly(int n, std::initializer_list<std::pair<Exponent, long>> terms) {
  LatticePolynomial f;
  f.n = n;
  for (const auto& [e, c] : terms) f.add(e, Complex(c));
  return f;
}

LatticePointSet basis_points(const Matroid& m) {
  std::vector<Exponent> pts;
  for (Subset b : m.bases()) {
    Exponent e(static_cast<std::size_t>(m.n()), 0);
    for (int i = 1; i <= m.n(); ++i) e[i - 1] = contains(b, i) ? 1 : 0;
    pts.push_back(e);
  }
  return LatticePointSet::of(m.n(), pts);
}

LatticePointSet elementary_symmetric(int d, int n) {
  std::vector<Exponent> pts;
  for (Subset s : k_subsets(n, d)) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (int i : members(s)) e[i - 1] = 1;
    pts.push_back(e);
  }
  return LatticePointSet::of(n, pts);
}

ValuedPolynomial valued(int n, std::initializer_list<std::pair<Exponent, long>> terms) {
  ValuedPolynomial f;
  f.n = n;
  for (const auto& [e, v] : terms) f.terms.emplace(e, ValuedTerm{Rational(v), Complex(1)});
  return f;
}

}  // namespace

TEST_CASE("polynomial bookkeeping") {
  LatticePolynomial f = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  f.add({1, 0}, Complex(-1));
  CHECK(f.terms.size() == 1);
  CHECK(f.str() == "x2");
  CHECK_THROWS(f.add({1}, Complex(1)));
  CHECK_THROWS(f.add({-1, 0}, Complex(1)));
  CHECK(is_homogeneous(support(poly(3, {{{1, 1, 0}, 1}, {{0, 0, 2}, 3}}))));
  CHECK_FALSE(is_homogeneous(support(poly(2, {{{1, 0}, 1}, {{0, 0}, 1}}))));
}

TEST_CASE("Newton polytope vertices and edges") {
  // square with its centre: the centre is not a vertex
  const auto s = LatticePointSet::of(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
  CHECK(newton_polytope_vertices(s).points == std::vector<Exponent>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
  CHECK(polytope_edges(s).size() == 4);
  CHECK(in_convex_hull(s, {1, 2}));
  CHECK_FALSE(in_convex_hull(s, {3, 0}));
  // hypersimplex Delta(2,4): octahedron, 12 edges all in directions e_i - e_j
  const auto oct = elementary_symmetric(2, 4);
  CHECK(polytope_edges(oct).size() == 12);
  CHECK(is_generalized_permutohedron(oct));
  CHECK_FALSE(is_generalized_permutohedron(LatticePointSet::of(3, {{2, 0, 0}, {0, 1, 1}})));
}

TEST_CASE("elementary symmetric Newton polytopes are generalized permutohedra") {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= n; ++d) CHECK(is_generalized_permutohedron(elementary_symmetric(d, n)));
  }
}

TEST_CASE("exchange axiom equals the hull-literal definition on weight-2 points of {0,1,2}^3") {
  std::vector<Exponent> pts;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; a + b <= 2; ++b) pts.push_back({a, b, 2 - a - b});
  }
  REQUIRE(pts.size() == 6);
  std::vector<oracle::P2> cands;
  for (const auto& p : pts) cands.push_back({p[0], p[1]});
  int m_convex = 0;
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<Exponent> sub;
    std::vector<oracle::P2> sub2;
    for (int i = 0; i < 6; ++i) {
      if (mask >> i & 1U) {
        sub.push_back(pts[static_cast<std::size_t>(i)]);
        sub2.push_back(cands[static_cast<std::size_t>(i)]);
      }
    }
    const bool exch = is_M_convex_set(LatticePointSet::of(3, sub));
    CHECK(exch == oracle::m_convex_hull_literal(sub2, cands));
    m_convex += exch;
  }
  CHECK(m_convex > 6);
}

TEST_CASE("matroid basis sets are M-convex and 0/1 families agree with basis exchange") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& m : all_matroids(n)) CHECK(is_M_convex_set(basis_points(m)));
  }
  gen::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    const int d = static_cast<int>(rng.uniform(1, n - 1));
    std::vector<Subset> fam;
    for (Subset s : k_subsets(n, d)) {
      if (rng.coin()) fam.push_back(s);
    }
    if (fam.empty()) continue;
    const auto m = Matroid::from_bases_unchecked(n, d, fam);
    CHECK(is_M_convex_set(basis_points(m)) == !Matroid::find_exchange_violation(n, fam).has_value());
  }
  CHECK_THROWS(is_M_convex_set(LatticePointSet::of(2, {{1, 0}, {1, 1}})));
}

TEST_CASE("exchange failure certificate") {
  const auto f = m_convex_exchange_failure(LatticePointSet::of(3, {{2, 0, 0}, {0, 1, 1}}));
  REQUIRE(f.has_value());
  CHECK(f->x == Exponent{0, 1, 1});
  CHECK(f->i == 2);
}

TEST_CASE("t-initial forms") {
  ValuedPolynomial f123;
  f123.n = 4;
  f123.terms.emplace(Exponent{0, 1, 1, 0}, ValuedTerm{0, Complex(1)});
  f123.terms.emplace(Exponent{1, 0, 1, 0}, ValuedTerm{0, Complex(1)});
  f123.terms.emplace(Exponent{1, 1, 0, 0}, ValuedTerm{0, Complex(1)});
  const RationalVector w{Rational(1, 2), Rational(1, 2), 0, -1};
  const auto t = tinit(f123, w);
  CHECK(t.str() == "x2*x3 + x1*x3");
  CHECK(in_tropical_hypersurface(f123, w));
  CHECK_FALSE(in_tropical_hypersurface(f123, ints({0, 0, 1, 0})));
  CHECK_THROWS(tinit(f123, ints({0, 0})));
}

TEST_CASE("tinit idempotence on constant coefficients") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    LatticePolynomial f;
    f.n = 3;
    for (int k = 0; k < 6; ++k) {
      Exponent e{static_cast<int>(rng.uniform(0, 2)), static_cast<int>(rng.uniform(0, 2)),
                 static_cast<int>(rng.uniform(0, 2))};
      f.add(e, Complex(gen::rational(rng), gen::rational(rng)));
    }
    const auto g = ValuedPolynomial::constant_coefficients(f);
    const auto w = gen::vector(rng, 3);
    const auto once = tinit(g, w);
    CHECK(tinit(ValuedPolynomial::constant_coefficients(once), ints({0, 0, 0})) == once);
    CHECK(tinit(ValuedPolynomial::constant_coefficients(once), w) == once);
  }
}

TEST_CASE("subdivision cells contain every sampled argmin set") {
  gen::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    ValuedPolynomial f;
    f.n = 3;
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; a + b <= 2; ++b) {
        if (rng.uniform(0, 3) > 0) f.terms.emplace(Exponent{a, b, 2 - a - b}, ValuedTerm{Rational(rng.uniform(0, 3)), Complex(1)});
      }
    }
    if (f.terms.empty()) continue;
    const auto cells = regular_subdivision_cells(f);
    for (const auto& c : cells) {
      const auto w = cell_weight(f, c);
      REQUIRE(w.has_value());
      CHECK(support(tinit(f, *w)) == c);
    }
    for (int s = 0; s < 30; ++s) {
      const auto cell = support(tinit(f, gen::vector(rng, 3)));
      CHECK(std::find(cells.begin(), cells.end(), cell) != cells.end());
    }
  }
}

TEST_CASE("M-convex functions") {
  // constant valuations on the bases of U(2,4): a single cell
  ValuedPolynomial u;
  u.n = 4;
  for (const auto& e : elementary_symmetric(2, 4).points) u.terms.emplace(e, ValuedTerm{0, Complex(1)});
  auto v = is_M_convex_function(u);
  CHECK(v.m_convex);
  // lifting two opposite vertices of the octahedron cuts it along the square {1100,0011} side
  const auto bad = valued(4, {{{1, 1, 0, 0}, 0}, {{0, 0, 1, 1}, 0}, {{1, 0, 1, 0}, 1}, {{0, 1, 0, 1}, 1}, {{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, 1}});
  v = is_M_convex_function(bad);
  CHECK_FALSE(v.m_convex);
  REQUIRE(v.failing_cell.has_value());
  CHECK_FALSE(is_M_convex_set(*v.failing_cell));
  REQUIRE(v.failing_weight.has_value());
  CHECK(support(tinit(bad, *v.failing_weight)) == *v.failing_cell);
  CHECK_THROWS(is_M_convex_function(valued(2, {{{1, 0}, 0}, {{0, 0}, 0}})));
}

TEST_CASE("M-convex function implies M-convex sampled initial supports") {
  gen::Rng rng(29);
  int positives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    ValuedPolynomial f;
    f.n = 3;
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; a + b <= 2; ++b) f.terms.emplace(Exponent{a, b, 2 - a - b}, ValuedTerm{Rational(rng.uniform(0, 2)), Complex(1)});
    }
    if (!is_M_convex_function(f).m_convex) continue;
    ++positives;
    for (int s = 0; s < 200; ++s) CHECK(is_M_convex_set(support(tinit(f, gen::vector(rng, 3)))));
  }
  CHECK(positives > 0);
}

TEST_CASE("binomial classification") {
  const Complex one(1), mone(-1);
  CHECK(classify_binomial(one, {0, 0}, mone, {1, 0}).stable);
  CHECK(classify_binomial(one, {1, 0}, one, {0, 1}).stable);
  CHECK_FALSE(classify_binomial(one, {1, 0}, mone, {0, 1}).stable);
  CHECK(classify_binomial(one, {0, 0}, mone, {1, 1}).stable);
  const auto plus = classify_binomial(one, {0, 0}, one, {1, 1});
  CHECK_FALSE(plus.stable);
  CHECK(plus.case_tag == "{0,e_i+e_j}");
  CHECK(classify_binomial(one, {2, 1}, one, {1, 2}).stable);  // common factor x1 x2
  CHECK_FALSE(classify_binomial(one, {2, 1}, mone, {1, 2}).stable);
  CHECK_FALSE(classify_binomial(one, {0, 0}, mone, {3, 0}).stable);
  // 1 + i x_1 has root i, in the upper half-plane
  CHECK_FALSE(classify_binomial(one, {0}, Complex(0, 1), {1}).stable);
  CHECK(classify_binomial(one, {0}, Complex(0, -1), {1}).stable);
  CHECK(classify_binomial(Complex(0, -1), {1}, one, {0}).stable);
  CHECK_THROWS(classify_binomial(one, {1}, one, {1}));
  CHECK_THROWS(classify_binomial(Complex(0), {1}, one, {0}));
}

TEST_CASE("line restriction and falsification") {
  const auto f = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(restrict_to_line(f, ints({1, 2}), ints({3, -1})).coeffs() == ints({2, 3}));
  CHECK(real_rooted_on_line(f, ints({1, 2}), ints({3, -1})));
  CHECK_THROWS(real_rooted_on_line(f, ints({0, 1}), ints({0, 0})));
  auto rep = falsify_stability(f, 1000, 0);
  CHECK_FALSE(rep.falsified);
  CHECK(rep.trials_run == 1000);
  CHECK(rep.note.find("not a proof") != std::string::npos);
  rep = falsify_stability(poly(2, {{{0, 0}, 1}, {{1, 1}, 1}}), 1000, 0);
  CHECK(rep.falsified);
  CHECK_FALSE(is_real_rooted(rep.restriction));
  CHECK(falsify_stability(poly(2, {{{0, 0}, 1}, {{1, 1}, 1}}), 1000, 0).v == rep.v);
}

TEST_CASE("stable binomials are never falsified") {
  const Complex pm[2] = {Complex(1), Complex(-1)};
  for (int a0 = 0; a0 <= 2; ++a0) {
    for (int b1 = 0; b1 <= 2; ++b1) {
      for (int sa = 0; sa < 2; ++sa) {
        for (int sb = 0; sb < 2; ++sb) {
          const Exponent alpha{a0, 0, 1}, beta{0, b1, 1};
          if (alpha == beta) continue;
          const auto v = classify_binomial(pm[sa], alpha, pm[sb], beta);
          LatticePolynomial f;
          f.n = 3;
          f.add(alpha, pm[sa]);
          f.add(beta, pm[sb]);
          const auto rep = falsify_stability(f, 1000, 0);
          if (v.stable) CHECK_FALSE(rep.falsified);
          if (v.case_tag == "|difference|>=3" || v.case_tag == "{0,e_i+e_j}") {
            INFO(f.str());
            CHECK(rep.falsified != v.stable);
          }
        }
      }
    }
  }
}
