#pragma once

// Dense univariate polynomials over Q and Sturm root counting.

#include <string>
#include <vector>

#include "trophyp/rational.hpp"

namespace trophyp {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients from degree 0 upward; trailing zeros are trimmed.
  explicit UPoly(RationalVector coeffs);
  static UPoly constant(const Rational& c) { return UPoly(RationalVector{c}); }
  /// a t + b
  static UPoly linear(const Rational& a, const Rational& b) { return UPoly(RationalVector{b, a}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const RationalVector& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }
  Rational eval(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string str() const;

 private:
  void trim();
  RationalVector c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly pow(const UPoly& a, int e);

/// Number of distinct real roots (for any nonzero polynomial).
int count_distinct_real_roots(const UPoly& p);
/// g / gcd(g, g').
UPoly square_free_part(const UPoly& p);
/// All roots real (with multiplicity). Constant and zero polynomials count as real-rooted.
bool is_real_rooted(const UPoly& p);

}  // namespace trophyp
