#pragma once

// Sign-variation counts and the pointwise membership tests for positive and
// nonnegative subspaces. Everything here is exact; no floating point.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trophyp/rational.hpp"

namespace trophyp {

using Sign = std::int8_t;

/// Ternary sign word over {-1, 0, +1}.
struct SignPattern {
  std::vector<Sign> signs;

  SignPattern() = default;
  explicit SignPattern(std::vector<Sign> s) : signs(std::move(s)) {}

  std::size_t size() const { return signs.size(); }
  Sign operator[](std::size_t i) const { return signs[i]; }
  bool is_zero() const;

  /// "+0-" style rendering.
  std::string str() const;
  static SignPattern parse(std::string_view text);

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;
};

SignPattern sign(std::span<const Rational> v);

/// Sign changes after discarding zeros.
int var(std::span<const Sign> s);
int var(const SignPattern& s);
int var(std::span<const Rational> v);

/// Sign changes when zeros are assigned signs maximizing the count.
/// Linear-time DP over (position, last sign); varbar of the zero word of
/// length n is n - 1.
int varbar(std::span<const Sign> s);
int varbar(const SignPattern& s);
int varbar(std::span<const Rational> v);

/// A vector v != 0 lies in some c-dimensional nonnegative subspace iff var(v) < c.
/// Throws std::invalid_argument for the zero vector or c outside [1, n].
bool exists_nonnegative_subspace_containing(std::span<const Rational> v, int c);

/// A vector v != 0 lies in some c-dimensional positive subspace iff varbar(v) < c.
bool exists_positive_subspace_containing(std::span<const Rational> v, int c);

/// Signs for positions i_1 < ... < i_k (1-based) such that every vector with
/// those signs there has varbar <= n - k. The first sign is +1 and consecutive
/// signs flip exactly when the index gap is even.
std::vector<Sign> sign_chooser(std::span<const int> support, int n);

/// Pattern of length n with the chooser's signs on the support and zeros elsewhere.
SignPattern sign_chooser_pattern(std::span<const int> support, int n);

/// Every word in {-1,0,+1}^n except the zero word, in lexicographic order of
/// the base-3 index.
std::vector<SignPattern> all_nonzero_sign_patterns(int n);

}  // namespace trophyp
