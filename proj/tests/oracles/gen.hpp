#pragma once

// Hand-rolled deterministic generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "trophyp/exactlin.hpp"
#include "trophyp/rational.hpp"
#include "trophyp/signvar.hpp"

namespace gen {

using trophyp::ExactMatrix;
using trophyp::Rational;
using trophyp::RationalVector;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // Inclusive range, portable (no distribution objects).
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 eng_;
};

inline Rational rational(Rng& r, int num = 5, int den = 4) {
  Rational q(r.uniform(-num, num), r.uniform(1, den));
  q.canonicalize();
  return q;
}

inline RationalVector vector(Rng& r, std::size_t n, int num = 5, int den = 4) {
  RationalVector v(n);
  for (auto& x : v) x = rational(r, num, den);
  return v;
}

inline ExactMatrix matrix(Rng& r, std::size_t rows, std::size_t cols, int num = 3, int den = 2) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(r, num, den);
  }
  return m;
}

/// Rows t_j^i for 0 < t_1 < ... < t_n: every maximal minor is positive.
inline ExactMatrix positive_vandermonde(Rng& r, std::size_t rows, std::size_t cols) {
  RationalVector t(cols);
  Rational acc = 0;
  for (auto& x : t) {
    Rational step(r.uniform(1, 4), r.uniform(1, 3));
    step.canonicalize();
    acc += step;
    x = acc;
  }
  ExactMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Rational p = 1;
    for (std::size_t i = 0; i < rows; ++i) {
      m(i, j) = p;
      p *= t[j];
    }
  }
  return m;
}

/// A random full-row-rank matrix of the requested shape.
template <class Make>
ExactMatrix full_rank(Rng& r, std::size_t rows, std::size_t cols, Make make) {
  for (;;) {
    ExactMatrix m = make(r, rows, cols);
    if (trophyp::rank(m) == rows) return m;
  }
}

inline trophyp::SignPattern sign_pattern(Rng& r, std::size_t n) {
  std::vector<trophyp::Sign> s(n);
  for (auto& x : s) x = static_cast<trophyp::Sign>(r.uniform(-1, 1));
  return trophyp::SignPattern(std::move(s));
}

/// Mixes generic, totally positive and nonnegative-with-degeneracies subspaces.
inline ExactMatrix random_subspace(Rng& rng, std::size_t c, std::size_t n) {
  switch (rng.uniform(0, 3)) {
    case 0: return full_rank(rng, c, n, [](Rng& r, std::size_t a, std::size_t b) { return matrix(r, a, b, 2, 1); });
    case 1: return positive_vandermonde(rng, c, n);
    case 2: {
      // nonnegative with zero or repeated columns
      return full_rank(rng, c, n, [](Rng& r, std::size_t a, std::size_t b) {
        ExactMatrix m = positive_vandermonde(r, a, b);
        const std::size_t j = static_cast<std::size_t>(r.uniform(0, static_cast<long>(b) - 1));
        for (std::size_t i = 0; i < a; ++i) m(i, j) = (j > 0 && r.coin()) ? m(i, j - 1) : Rational(0);
        return m;
      });
    }
    default: return full_rank(rng, c, n, [](Rng& r, std::size_t a, std::size_t b) { return matrix(r, a, b, 1, 1); });
  }
}

}  // namespace gen
