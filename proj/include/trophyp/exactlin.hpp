#pragma once

// Exact rational linear algebra: determinants, ranks, row reduction,
// Pluecker vectors, Grassmannian sign classes and sign-orthant feasibility.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trophyp/matroid.hpp"
#include "trophyp/rational.hpp"
#include "trophyp/signvar.hpp"

namespace trophyp {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws std::invalid_argument on ragged input.
  static ExactMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols_if_empty = 0);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalVector column(std::size_t j) const;
  ExactMatrix transpose() const;
  /// Columns given by 0-based indices, in the given order.
  ExactMatrix select_columns(std::span<const std::size_t> cols) const;
  ExactMatrix select_rows(std::span<const std::size_t> rows) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

/// Fraction-free (Bareiss) determinant of a square matrix.
Rational determinant(const ExactMatrix& m);
/// Rank by Bareiss elimination.
std::size_t rank(const ExactMatrix& m);
/// Reduced row echelon form; pivot columns returned through `pivots`.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots = nullptr);
/// Nonzero rows of the RREF: a canonical basis of the row space.
ExactMatrix row_basis(const ExactMatrix& m);
/// Basis of {x : m x = 0}, one vector per row.
ExactMatrix kernel(const ExactMatrix& m);

/// (n - r) x n matrix whose rows span the orthogonal complement of the row space.
/// Throws std::invalid_argument unless m has full row rank.
ExactMatrix orthogonal_complement(const ExactMatrix& m);

struct PlueckerVector {
  int c = 0;
  int n = 0;
  std::vector<Subset> subsets;  // c-subsets of [n], lexicographic
  RationalVector coords;

  const Rational& at(Subset s) const;
};

/// Throws std::invalid_argument if rank(m) < rows(m) or rows > cols.
PlueckerVector maximal_minors(const ExactMatrix& m);

enum class GrassClass { Positive, Nonnegative, Mixed };
std::string to_string(GrassClass g);
GrassClass grassmannian_class(const ExactMatrix& m);

/// Does the row space contain v with sign(v) = tau exactly? Decided by exact LP.
bool sign_orthant_feasible(const ExactMatrix& l, const SignPattern& tau);

/// All nonzero sign vectors realized by the row space (its covectors),
/// obtained as compositions of cocircuits. Sorted.
std::vector<SignPattern> covectors(const ExactMatrix& l);
/// Same set by running sign_orthant_feasible over every nonzero pattern.
std::vector<SignPattern> covectors_by_sweep(const ExactMatrix& l);

struct VariationExtremes {
  int max_var = 0;
  int max_varbar = 0;
  int min_var = 0;
  int min_varbar = 0;
  bool empty = true;  // the row space is {0}
};

VariationExtremes variation_extremes(const ExactMatrix& l);
int max_var_over_subspace(const ExactMatrix& l);
int max_varbar_over_subspace(const ExactMatrix& l);

struct ComplexMatrix {
  ExactMatrix real_part;
  ExactMatrix imag_part;
};

/// Rank over C, via the realification [[A, B], [-B, A]].
std::size_t complex_rank(const ComplexMatrix& m);

struct LinearHypVerdict {
  bool hyperbolic = false;
  bool defined_over_reals = false;
  std::size_t complex_rank = 0;
  std::size_t real_rank = 0;
  ExactMatrix real_form;
  ExactMatrix complement;
  std::optional<GrassClass> complement_class;
  std::string failed_condition;  // empty on success
};

/// Row space L of A + iB: defined over R and the complement of its real part nonnegative.
LinearHypVerdict is_positively_hyperbolic_linear(const ComplexMatrix& m);

Matroid matroid_of_columns(const ExactMatrix& m);

}  // namespace trophyp
