#include <algorithm>

#include "doctest.h"
#include "oracles/gen.hpp"
#include "trophyp/upoly.hpp"

using namespace trophyp;

namespace {
UPoly from_roots(const RationalVector& roots) {
  UPoly p = UPoly::constant(1);
  for (const auto& r : roots) p = p * UPoly::linear(1, -r);
  return p;
}
}  // namespace

TEST_CASE("arithmetic and printing") {
  const UPoly p = UPoly::linear(2, -3);
  CHECK(p.degree() == 1);
  CHECK(p.str() == "2t - 3");
  CHECK((p * p).str() == "4t^2 - 12t + 9");
  CHECK((p - p).is_zero());
  CHECK(UPoly().degree() == -1);
  CHECK(pow(UPoly::linear(1, 1), 3).coeffs() == RationalVector{1, 3, 3, 1});
  CHECK(p.eval(Rational(3, 2)) == 0);
}

TEST_CASE("division identity") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    UPoly a(gen::vector(rng, static_cast<std::size_t>(rng.uniform(1, 6))));
    UPoly b(gen::vector(rng, static_cast<std::size_t>(rng.uniform(1, 4))));
    if (b.is_zero()) continue;
    UPoly q, r;
    divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  UPoly q, r;
  CHECK_THROWS_AS(divmod(UPoly::constant(1), UPoly(), q, r), std::domain_error);
}

TEST_CASE("gcd of products with shared roots") {
  const UPoly a = from_roots({1, 2, Rational(-1, 3)});
  const UPoly b = from_roots({2, Rational(-1, 3), 5});
  CHECK(gcd(a, b) == from_roots({2, Rational(-1, 3)}));
}

TEST_CASE("Sturm counts agree with planted rational roots") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    RationalVector roots;
    const int k = static_cast<int>(rng.uniform(1, 5));
    for (int i = 0; i < k; ++i) roots.push_back(gen::rational(rng, 4, 3));
    UPoly p = from_roots(roots);
    RationalVector distinct = roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    CHECK(count_distinct_real_roots(p) == static_cast<int>(distinct.size()));
    CHECK(is_real_rooted(p));
    CHECK(square_free_part(p).monic() == from_roots(distinct));
    // an irreducible quadratic factor removes real-rootedness without changing the count
    const UPoly q = p * UPoly(RationalVector{Rational(rng.uniform(1, 5)), 0, 1});
    CHECK(count_distinct_real_roots(q) == static_cast<int>(distinct.size()));
    CHECK_FALSE(is_real_rooted(q));
  }
}

TEST_CASE("degenerate inputs") {
  CHECK(is_real_rooted(UPoly()));
  CHECK(is_real_rooted(UPoly::constant(7)));
  CHECK(count_distinct_real_roots(UPoly::constant(7)) == 0);
  CHECK_THROWS_AS(count_distinct_real_roots(UPoly()), std::domain_error);
  CHECK_FALSE(is_real_rooted(UPoly(RationalVector{1, 0, 0, 1})));  // t^3 + 1
}
