#pragma once

// Seeded generator with portable bounded sampling; no std distributions,
// so sample streams are identical across standard libraries.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "trophyp/rational.hpp"

namespace trophyp {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  /// p/q with p in [plo, phi] and q in [1, qmax].
  Rational rational(long plo, long phi, long qmax) {
    const long p = uniform(plo, phi);
    const long q = uniform(1, qmax);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 eng_;
};

/// Seed from TROPHYP_SEED, or `fallback` when unset or malformed.
inline std::uint64_t seed_from_env(std::uint64_t fallback = 0) {
  const char* s = std::getenv("TROPHYP_SEED");
  if (s == nullptr || *s == '\0') return fallback;
  try {
    return std::stoull(s);
  } catch (...) {
    return fallback;
  }
}

}  // namespace trophyp
