#pragma once

// Polynomials with exact complex-rational or valued coefficients: Newton
// polytopes, generalized-permutohedron and M-convexity tests, t-initial forms,
// binomial stability and Sturm-based falsification along real lines.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trophyp/rational.hpp"
#include "trophyp/upoly.hpp"

namespace trophyp {

using Exponent = std::vector<int>;

struct LatticePolynomial {
  int n = 0;
  std::map<Exponent, Complex> terms;  // no zero coefficients

  /// Adds c x^e, dropping the term if it cancels.
  void add(const Exponent& e, const Complex& c);
  bool is_real() const;
  std::string str() const;
  friend bool operator==(const LatticePolynomial&, const LatticePolynomial&) = default;
};

struct ValuedTerm {
  Rational val;
  Complex lead;  // nonzero
};

/// Puiseux-coefficient polynomial, reduced to (valuation, leading coefficient) per term.
struct ValuedPolynomial {
  int n = 0;
  std::map<Exponent, ValuedTerm> terms;

  static ValuedPolynomial constant_coefficients(const LatticePolynomial& f);
};

struct LatticePointSet {
  int n = 0;
  std::vector<Exponent> points;  // sorted, distinct

  static LatticePointSet of(int n, std::vector<Exponent> pts);
  bool contains(const Exponent& e) const;
  friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;
};

LatticePointSet support(const LatticePolynomial& f);
LatticePointSet support(const ValuedPolynomial& f);
bool is_homogeneous(const LatticePointSet& s);

/// Points of S that are not convex combinations of the others (exact LP).
LatticePointSet newton_polytope_vertices(const LatticePointSet& s);
LatticePointSet newton_polytope_vertices(const LatticePolynomial& f);
LatticePointSet newton_polytope_vertices(const ValuedPolynomial& f);

/// Is p in conv(S)? Exact LP.
bool in_convex_hull(const LatticePointSet& s, const Exponent& p);

struct PolytopeEdge {
  Exponent u;
  Exponent v;
  std::vector<long> direction;  // primitive, v - u scaled down
};

/// Edges among the vertices of conv(S): pairs maximized alone by some functional.
std::vector<PolytopeEdge> polytope_edges(const LatticePointSet& s);
bool is_generalized_permutohedron(const LatticePointSet& s);

struct ExchangeFailure {
  Exponent x;
  Exponent y;
  int i = 0;  // 1-based coordinate with x_i > y_i lacking a partner j
};

/// Exchange axiom. Throws std::invalid_argument for mixed coordinate sums.
std::optional<ExchangeFailure> m_convex_exchange_failure(const LatticePointSet& s);
bool is_M_convex_set(const LatticePointSet& s);

/// Terms minimizing val + w . exponent, with their leading coefficients.
LatticePolynomial tinit(const ValuedPolynomial& f, const RationalVector& w);
/// Minimum of val + w . exponent attained at least twice.
bool in_tropical_hypersurface(const ValuedPolynomial& f, const RationalVector& w);

/// Every cell of the regular subdivision of the support lifted by valuations,
/// i.e. every set of the form argmin_p (val(p) + w . p).
std::vector<LatticePointSet> regular_subdivision_cells(const ValuedPolynomial& f);

struct MConvexFunctionVerdict {
  bool m_convex = true;
  std::size_t cells_checked = 0;
  std::optional<LatticePointSet> failing_cell;
  std::optional<RationalVector> failing_weight;  // tinit at this weight has support failing_cell
};

/// A weight w whose tinit support is exactly `cell`, when `cell` is a cell.
std::optional<RationalVector> cell_weight(const ValuedPolynomial& f, const LatticePointSet& cell);

/// Throws std::invalid_argument for a non-homogeneous support.
MConvexFunctionVerdict is_M_convex_function(const ValuedPolynomial& f);

struct BinomialVerdict {
  bool stable = false;
  std::string case_tag;   // "{0,e_i}", "{e_i,e_j}", "{0,e_i+e_j}" or "|difference|>=3"
  std::string condition;  // the sign condition the case imposes
  Exponent reduced_alpha;
  Exponent reduced_beta;
};

/// a x^alpha + b x^beta with a, b nonzero. Throws if alpha == beta.
BinomialVerdict classify_binomial(const Complex& a, const Exponent& alpha, const Complex& b, const Exponent& beta);

/// g(t) = f(t v + w). f must have real coefficients.
UPoly restrict_to_line(const LatticePolynomial& f, const RationalVector& v, const RationalVector& w);
/// Requires v > 0 entrywise. Zero and constant restrictions count as real-rooted.
bool real_rooted_on_line(const LatticePolynomial& f, const RationalVector& v, const RationalVector& w);

struct FalsifyReport {
  bool falsified = false;
  int trials_run = 0;
  RationalVector v;
  RationalVector w;
  UPoly restriction;
  std::string note;
};

/// Samples lines t v + w with v_i = p/q (p, q in 1..10) and w_i in -10..10.
/// A restriction that vanishes identically is also a counterexample: f then
/// vanishes at t = i, a point with positive imaginary parts.
FalsifyReport falsify_stability(const LatticePolynomial& f, int trials, std::uint64_t seed);

}  // namespace trophyp
