#include <set>

#include "doctest.h"
#include "oracles/brute.hpp"
#include "oracles/gen.hpp"
#include "trophyp/catalog.hpp"
#include "trophyp/exactlin.hpp"
#include "trophyp/matroid.hpp"

using namespace trophyp;

namespace {
Matroid from(int n, int d, std::initializer_list<std::initializer_list<int>> bases) {
  std::vector<Subset> b;
  for (auto s : bases) b.push_back(subset_of(std::vector<int>(s)));
  return Matroid::from_bases(n, d, b);
}

const Matroid& crossing4() {
  static const Matroid m = from(4, 2, {{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  return m;
}

const std::vector<Matroid>& small_catalog() {
  static const std::vector<Matroid> all = [] {
    std::vector<Matroid> out;
    for (int n = 0; n <= 5; ++n) {
      auto part = all_matroids(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }();
  return all;
}

RationalVector ints(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("construction and exchange witness") {
  CHECK(crossing4().bases().size() == 4);
  CHECK(from(3, 2, {{1, 2}, {1, 3}, {2, 3}}) == Matroid::uniform(2, 3));
  try {
    from(4, 2, {{1, 2}, {3, 4}});
    FAIL("expected an exchange failure");
  } catch (const MatroidError& e) {
    REQUIRE(e.witness.has_value());
    const auto w = *e.witness;
    CHECK(contains(w.b1, w.x));
    CHECK_FALSE(contains(w.b2, w.x));
  }
  CHECK_THROWS_AS(from(3, 2, {{1}}), MatroidError);
  CHECK_THROWS_AS(Matroid::from_bases(3, 1, {}), MatroidError);
}

TEST_CASE("circuits and components") {
  CHECK(circuits(Matroid::uniform(2, 3)) == std::vector<Subset>{subset_of({1, 2, 3})});
  CHECK(circuits(crossing4()) == std::vector<Subset>{subset_of({1, 3}), subset_of({2, 4})});
  CHECK(circuits(Matroid::uniform(2, 2)).empty());
  CHECK(connected_components(crossing4()).blocks == std::vector<Subset>{subset_of({1, 3}), subset_of({2, 4})});
  CHECK(connected_components(Matroid::uniform(2, 3)).blocks.size() == 1);
  const auto two = direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2));
  CHECK(connected_components(two).blocks == std::vector<Subset>{subset_of({1, 2}), subset_of({3, 4})});
}

TEST_CASE("duality and minors") {
  CHECK(dual(Matroid::uniform(1, 3)) == Matroid::uniform(2, 3));
  CHECK(restrict(Matroid::uniform(2, 4), subset_of({1, 2, 3})) == Matroid::uniform(2, 3));
  CHECK(contract(Matroid::uniform(2, 4), subset_of({1})) == Matroid::uniform(1, 3));
  CHECK(is_loopless(Matroid::uniform(1, 3)));
  const auto with_loop = Matroid::from_bases(3, 1, {subset_of({1}), subset_of({2})});
  CHECK(loops(with_loop) == subset_of({3}));
  CHECK(parallelism_class(with_loop, 1) == subset_of({1, 2}));
  CHECK(parallelism_class(crossing4(), 1) == subset_of({1, 3}));
}

TEST_CASE("face matroids") {
  const auto u23 = Matroid::uniform(2, 3);
  CHECK(face_matroid(u23, ints({0, 0, 0})).matroid == u23);
  const auto f = face_matroid(u23, ints({1, 0, 0}));
  CHECK(f.matroid.bases() == std::vector<Subset>{subset_of({1, 2}), subset_of({1, 3})});
  CHECK(f.dimension == 1);
  const auto v = face_matroid(crossing4(), ints({1, 1, 0, 0}));
  CHECK(v.matroid.bases() == std::vector<Subset>{subset_of({1, 2})});
  CHECK(v.dimension == 0);
}

TEST_CASE("non-crossing partitions") {
  CyclicPartition fig{10, {subset_of({1, 4, 8, 9}), subset_of({2, 3}), subset_of({5, 6, 7}), subset_of({10})}};
  CHECK(is_noncrossing_partition(fig));
  CyclicPartition cross{4, {subset_of({1, 3}), subset_of({2, 4})}};
  CHECK_FALSE(is_noncrossing_partition(cross));
  CyclicPartition singles{5, {1, 2, 4, 8, 16}};
  CHECK(is_noncrossing_partition(singles));
  CHECK_FALSE(is_noncrossing_matroid(crossing4()));
  CHECK(is_noncrossing_matroid(Matroid::uniform(2, 4)));
  CHECK(is_noncrossing_matroid(direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2))));
}

TEST_CASE("property: stack scan equals quadruple check on random partial partitions") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 12));
    const int k = static_cast<int>(rng.uniform(1, 5));
    std::vector<Subset> blocks(static_cast<std::size_t>(k), 0);
    for (int e = 1; e <= n; ++e) {
      const long long b = rng.uniform(-1, k - 1);
      if (b >= 0) blocks[b] |= element(e);
    }
    CyclicPartition p{n, {}};
    for (Subset b : blocks) {
      if (b != 0) p.blocks.push_back(b);
    }
    REQUIRE(is_noncrossing_partition(p) == is_noncrossing_partition_quadruple(p));
  }
}

TEST_CASE("ordered set partitions are counted by the Fubini numbers") {
  const std::vector<long> fubini{1, 1, 3, 13, 75, 541, 4683};
  for (int n = 0; n <= 6; ++n) {
    long count = 0;
    std::set<std::vector<int>> seen;
    for_each_ordered_set_partition(n, [&](const std::vector<int>& l) {
      ++count;
      seen.insert(l);
    });
    CHECK(count == fubini[n]);
    CHECK(static_cast<long>(seen.size()) == count);
  }
}

TEST_CASE("loopless faces") {
  CHECK(loopless_faces_of_dim(Matroid::uniform(2, 3), 1).size() == 3);
  CHECK(loopless_faces_of_dim(Matroid::uniform(2, 2), 0).size() == 1);
  CHECK(loopless_faces_of_dim(crossing4(), 2).size() == 1);
  // no loopless facet: the only face of dimension n-d is the polytope itself
  int facets = 0;
  for (const auto& f : all_faces(crossing4())) {
    if (f.dimension == 1 && is_loopless(f.matroid)) ++facets;
  }
  CHECK(facets == 0);
  CHECK_THROWS_AS(loopless_faces_of_dim(crossing4(), 1), std::invalid_argument);
  CHECK_THROWS_AS(loopless_faces_of_dim(Matroid::uniform(2, 3), 0), std::invalid_argument);
}

TEST_CASE("positroids") {
  const auto v = is_positroid(crossing4());
  CHECK_FALSE(v.positroid);
  REQUIRE(v.crossing_face.has_value());
  CHECK(connected_components(v.crossing_face->matroid).blocks ==
        std::vector<Subset>{subset_of({1, 3}), subset_of({2, 4})});
  gen::Rng rng(43);
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= n; ++d) {
      CHECK(is_positroid(Matroid::uniform(d, n)).positroid);
      if (d > 0 && d < n) {
        CHECK(matroid_of_columns(gen::positive_vandermonde(rng, static_cast<std::size_t>(d), static_cast<std::size_t>(n))) ==
              Matroid::uniform(d, n));
      }
    }
  }
  Matroid singles = Matroid::uniform(1, 1);
  for (int k = 0; k < 4; ++k) singles = direct_sum(singles, Matroid::uniform(1, 1));
  CHECK(is_positroid(singles).positroid);
  // a loop in the middle is stripped
  const auto loopy = Matroid::from_bases(3, 1, {subset_of({1}), subset_of({3})});
  const auto lv = is_positroid(loopy);
  CHECK(lv.positroid);
  CHECK(lv.stripped_loops == subset_of({2}));
}

TEST_CASE("catalog counts") {
  const std::vector<std::size_t> expected{1, 2, 5, 16, 68, 406};
  for (int n = 0; n <= 5; ++n) CHECK(all_matroids(n).size() == expected[n]);
}

TEST_CASE("property: catalog invariants, n <= 5") {
  gen::Rng rng(47);
  for (const auto& m : small_catalog()) {
    REQUIRE_FALSE(Matroid::find_exchange_violation(m.n(), m.bases()).has_value());
    REQUIRE(dual(dual(m)) == m);
    for (int t = 0; t < 5; ++t) {
      const auto w = gen::vector(rng, static_cast<std::size_t>(m.n()), 2, 2);
      REQUIRE(face_matroid(m, w).matroid == face_matroid_greedy(m, w));
    }
    const auto pv = is_positroid(m);
    REQUIRE(pv.positroid == oracle::is_positroid_necklace(restrict(m, m.ground() & ~loops(m))));
    if (pv.positroid) {
      REQUIRE(is_noncrossing_matroid(restrict(m, m.ground() & ~loops(m))));
    }
    REQUIRE(is_positroid(dual(m)).positroid == pv.positroid);
  }
}

TEST_CASE("property: a face of a face is a face") {
  gen::Rng rng(53);
  for (const auto& m : small_catalog()) {
    if (m.n() < 2) continue;
    const auto w = gen::vector(rng, static_cast<std::size_t>(m.n()), 2, 1);
    const auto w2 = gen::vector(rng, static_cast<std::size_t>(m.n()), 2, 1);
    const auto inner = face_matroid(face_matroid(m, w).matroid, w2);
    // eps below every nonzero gap of w . e_B divided by the spread of w2 . e_B
    Rational gap = -1;
    Rational spread = 1;
    for (Subset a : m.bases()) {
      for (Subset b : m.bases()) {
        Rational d1 = 0, d2 = 0;
        for (int e : members(a)) {
          d1 += w[e - 1];
          d2 += w2[e - 1];
        }
        for (int e : members(b)) {
          d1 -= w[e - 1];
          d2 -= w2[e - 1];
        }
        if (sgn(d1) > 0 && (gap < 0 || d1 < gap)) gap = d1;
        if (abs(d2) + 1 > spread) spread = abs(d2) + 1;
      }
    }
    const Rational eps = gap < 0 ? Rational(1) : gap / (2 * spread);
    RationalVector sum(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) sum[i] = w[i] + eps * w2[i];
    REQUIRE(face_matroid(m, sum).matroid == inner.matroid);
  }
}
