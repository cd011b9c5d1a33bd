#include "trophyp/exactlin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "trophyp/lp.hpp"

namespace trophyp {

ExactMatrix ExactMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector ExactMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalVector ExactMatrix::column(std::size_t j) const {
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> cols) const {
  ExactMatrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
  }
  return out;
}

ExactMatrix ExactMatrix::select_rows(std::span<const std::size_t> rows) const {
  ExactMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
  ExactMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

namespace {

/// In-place Bareiss forward elimination. Returns the rank; `sign` tracks row swaps.
std::size_t bareiss(ExactMatrix& a, int& sign) {
  sign = 1;
  Rational prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  ExactMatrix a = m;
  int sign = 1;
  if (bareiss(a, sign) < a.rows()) return 0;
  return sign * a(a.rows() - 1, a.cols() - 1);
}

std::size_t rank(const ExactMatrix& m) {
  ExactMatrix a = m;
  int sign = 1;
  return bareiss(a, sign);
}

ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots) {
  ExactMatrix a = m;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots != nullptr) *pivots = piv;
  return a;
}

ExactMatrix row_basis(const ExactMatrix& m) {
  std::vector<std::size_t> piv;
  const ExactMatrix r = rref(m, &piv);
  std::vector<std::size_t> keep(piv.size());
  for (std::size_t i = 0; i < piv.size(); ++i) keep[i] = i;
  ExactMatrix out = r.select_rows(keep);
  return out;
}

ExactMatrix kernel(const ExactMatrix& m) {
  std::vector<std::size_t> piv;
  const ExactMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : piv) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(m.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -r(i, f);
    basis.push_back(std::move(x));
  }
  return ExactMatrix::from_rows(basis, m.cols());
}

ExactMatrix orthogonal_complement(const ExactMatrix& m) {
  if (rank(m) != m.rows()) throw std::invalid_argument("orthogonal_complement: matrix must have full row rank");
  return kernel(m);
}

const Rational& PlueckerVector::at(Subset s) const {
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (subsets[i] == s) return coords[i];
  }
  throw std::out_of_range("subset is not a coordinate of this Pluecker vector");
}

PlueckerVector maximal_minors(const ExactMatrix& m) {
  if (m.rows() > m.cols()) throw std::invalid_argument("maximal_minors: more rows than columns");
  if (m.cols() > static_cast<std::size_t>(kMaxGround) + 20) throw std::invalid_argument("maximal_minors: too many columns");
  if (rank(m) != m.rows()) throw std::invalid_argument("maximal_minors: matrix must have full row rank");
  PlueckerVector p;
  p.c = static_cast<int>(m.rows());
  p.n = static_cast<int>(m.cols());
  p.subsets = k_subsets(p.n, p.c);
  p.coords.reserve(p.subsets.size());
  for (Subset s : p.subsets) {
    std::vector<std::size_t> cols;
    for (int e : members(s)) cols.push_back(static_cast<std::size_t>(e - 1));
    p.coords.push_back(determinant(m.select_columns(cols)));
  }
  return p;
}

std::string to_string(GrassClass g) {
  switch (g) {
    case GrassClass::Positive: return "Positive";
    case GrassClass::Nonnegative: return "Nonnegative";
    case GrassClass::Mixed: return "Mixed";
  }
  return "?";
}

GrassClass grassmannian_class(const ExactMatrix& m) {
  const auto p = maximal_minors(m);
  bool pos = false;
  bool neg = false;
  bool zero = false;
  for (const auto& x : p.coords) {
    const int s = sgn(x);
    pos |= s > 0;
    neg |= s < 0;
    zero |= s == 0;
  }
  if (pos && neg) return GrassClass::Mixed;
  return zero ? GrassClass::Nonnegative : GrassClass::Positive;
}

bool sign_orthant_feasible(const ExactMatrix& l, const SignPattern& tau) {
  if (tau.size() != l.cols()) throw std::invalid_argument("sign pattern length must equal the number of columns");
  // v = y^T L; strict signs homogenized to |v_i| >= 1 since the row space is a cone.
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < l.cols(); ++i) {
    LinearConstraint con;
    con.coeffs = l.column(i);
    if (tau[i] == 0) {
      con.rel = Relation::Equal;
      con.rhs = 0;
    } else {
      if (tau[i] < 0) {
        for (auto& x : con.coeffs) x = -x;
      }
      con.rel = Relation::GreaterEq;
      con.rhs = 1;
    }
    cons.push_back(std::move(con));
  }
  return lp_feasible(l.rows(), cons);
}

namespace {

SignPattern compose(const SignPattern& x, const SignPattern& y) {
  SignPattern out = x;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out.signs[i] == 0) out.signs[i] = y.signs[i];
  }
  return out;
}

SignPattern negated(SignPattern p) {
  for (auto& s : p.signs) s = static_cast<Sign>(-s);
  return p;
}

}  // namespace

std::vector<SignPattern> covectors(const ExactMatrix& l) {
  const ExactMatrix b = row_basis(l);
  const std::size_t r = b.rows();
  const int n = static_cast<int>(b.cols());
  if (r == 0) return {};
  std::set<SignPattern> cocircuits;
  for (Subset s : k_subsets(n, static_cast<int>(r) - 1)) {
    std::vector<std::size_t> cols;
    for (int e : members(s)) cols.push_back(static_cast<std::size_t>(e - 1));
    const ExactMatrix sub = b.select_columns(cols).transpose();  // (r-1) x r
    const ExactMatrix ker = kernel(sub);
    if (ker.rows() != 1) continue;
    const ExactMatrix v = ker * b;
    SignPattern p = sign(v.row(0));
    cocircuits.insert(negated(p));
    cocircuits.insert(std::move(p));
  }
  std::set<SignPattern> all(cocircuits.begin(), cocircuits.end());
  std::vector<SignPattern> work(cocircuits.begin(), cocircuits.end());
  while (!work.empty()) {
    const SignPattern x = std::move(work.back());
    work.pop_back();
    for (const auto& c : cocircuits) {
      SignPattern y = compose(x, c);
      if (all.insert(y).second) work.push_back(std::move(y));
    }
  }
  return {all.begin(), all.end()};
}

std::vector<SignPattern> covectors_by_sweep(const ExactMatrix& l) {
  std::vector<SignPattern> out;
  for (auto& p : all_nonzero_sign_patterns(static_cast<int>(l.cols()))) {
    if (sign_orthant_feasible(l, p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VariationExtremes variation_extremes(const ExactMatrix& l) {
  VariationExtremes e;
  for (const auto& p : covectors(l)) {
    const int v = var(p);
    const int vb = varbar(p);
    if (e.empty) {
      e.max_var = e.min_var = v;
      e.max_varbar = e.min_varbar = vb;
      e.empty = false;
    } else {
      e.max_var = std::max(e.max_var, v);
      e.min_var = std::min(e.min_var, v);
      e.max_varbar = std::max(e.max_varbar, vb);
      e.min_varbar = std::min(e.min_varbar, vb);
    }
  }
  return e;
}

int max_var_over_subspace(const ExactMatrix& l) { return variation_extremes(l).max_var; }
int max_varbar_over_subspace(const ExactMatrix& l) { return variation_extremes(l).max_varbar; }

std::size_t complex_rank(const ComplexMatrix& m) {
  const auto& a = m.real_part;
  const auto& b = m.imag_part;
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("complex matrix parts differ in shape");
  ExactMatrix big(2 * a.rows(), 2 * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      big(i, j) = a(i, j);
      big(i, a.cols() + j) = b(i, j);
      big(a.rows() + i, j) = -b(i, j);
      big(a.rows() + i, a.cols() + j) = a(i, j);
    }
  }
  return rank(big) / 2;
}

LinearHypVerdict is_positively_hyperbolic_linear(const ComplexMatrix& m) {
  LinearHypVerdict v;
  v.complex_rank = complex_rank(m);
  if (v.complex_rank != m.real_part.rows()) {
    throw std::invalid_argument("is_positively_hyperbolic_linear: matrix must have full row rank over C");
  }
  const ExactMatrix stacked = vstack(m.real_part, m.imag_part);
  v.real_rank = rank(stacked);
  v.defined_over_reals = v.real_rank == v.complex_rank;
  if (!v.defined_over_reals) {
    v.failed_condition = "row space is not defined over R";
    return v;
  }
  v.real_form = row_basis(stacked);
  v.complement = orthogonal_complement(v.real_form);
  if (v.complement.rows() == 0) {
    v.hyperbolic = true;
    return v;
  }
  v.complement_class = grassmannian_class(v.complement);
  v.hyperbolic = *v.complement_class != GrassClass::Mixed;
  if (!v.hyperbolic) v.failed_condition = "orthogonal complement is not a nonnegative subspace";
  return v;
}

Matroid matroid_of_columns(const ExactMatrix& m) {
  const int n = static_cast<int>(m.cols());
  if (n > kMaxGround) throw std::invalid_argument("matroid_of_columns: at most 12 columns");
  const ExactMatrix b = row_basis(m);
  const int r = static_cast<int>(b.rows());
  std::vector<Subset> bases;
  for (Subset s : k_subsets(n, r)) {
    std::vector<std::size_t> cols;
    for (int e : members(s)) cols.push_back(static_cast<std::size_t>(e - 1));
    if (sgn(determinant(b.select_columns(cols))) != 0) bases.push_back(s);
  }
  return Matroid::from_bases_unchecked(n, r, std::move(bases));
}

}  // namespace trophyp
