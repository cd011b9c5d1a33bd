#include "trophyp/lp.hpp"

#include <stdexcept>

namespace trophyp {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, RationalVector(cols + 1)), basis_(rows, 0), cost_(cols + 1), cols_(cols) {}

  Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  Rational& rhs(std::size_t i) { return a_[i][cols_]; }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  /// Installs "maximize c . x" as the reduced-cost row for the current basis.
  void set_objective(const RationalVector& c) {
    for (std::size_t j = 0; j <= cols_; ++j) cost_[j] = j < cols_ ? c[j] : Rational(0);
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= cb * a_[i][j];
    }
  }

  Rational objective_value() const { return -cost_[cols_]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& x : a_[r]) x /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(a_[r][j]) != 0) a_[i][j] -= f * a_[r][j];
      }
    }
    if (sgn(cost_[c]) != 0) {
      const Rational f = cost_[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(a_[r][j]) != 0) cost_[j] -= f * a_[r][j];
      }
    }
    basis_[r] = c;
  }

  /// Bland's rule simplex over columns [0, usable). Returns false if unbounded.
  bool run(std::size_t usable) {
    for (;;) {
      std::size_t enter = usable;
      for (std::size_t j = 0; j < usable; ++j) {
        if (sgn(cost_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == usable) return true;
      std::size_t leave = rows();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        Rational ratio = a_[i][cols_] / a_[i][enter];
        if (leave == rows() || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  void erase_row(std::size_t i) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

 private:
  std::vector<RationalVector> a_;
  std::vector<std::size_t> basis_;
  RationalVector cost_;
  std::size_t cols_;
};

}  // namespace

LpResult solve_lp(std::size_t num_vars, std::span<const LinearConstraint> constraints,
                  std::span<const Rational> objective) {
  for (const auto& con : constraints) {
    if (con.coeffs.size() != num_vars) throw std::invalid_argument("solve_lp: coefficient length mismatch");
  }
  if (!objective.empty() && objective.size() != num_vars) {
    throw std::invalid_argument("solve_lp: objective length mismatch");
  }

  // Column layout: [x+ (num_vars)] [x- (num_vars)] [slack/surplus] [artificial].
  const std::size_t m = constraints.size();
  std::size_t num_slack = 0;
  std::size_t num_art = 0;
  std::vector<Relation> rel(m);
  std::vector<bool> flip(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = constraints[i].rel;
    if (sgn(constraints[i].rhs) < 0) {
      flip[i] = true;
      if (rel[i] == Relation::LessEq) rel[i] = Relation::GreaterEq;
      else if (rel[i] == Relation::GreaterEq) rel[i] = Relation::LessEq;
    }
    if (rel[i] != Relation::Equal) ++num_slack;
    if (rel[i] != Relation::LessEq) ++num_art;
  }
  const std::size_t split = 2 * num_vars;
  const std::size_t art_begin = split + num_slack;
  const std::size_t ncols = art_begin + num_art;

  Tableau t(m, ncols);
  std::size_t next_slack = split;
  std::size_t next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = constraints[i];
    const int s = flip[i] ? -1 : 1;
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (sgn(con.coeffs[j]) == 0) continue;
      t.at(i, j) = s * con.coeffs[j];
      t.at(i, num_vars + j) = -s * con.coeffs[j];
    }
    t.rhs(i) = s * con.rhs;
    switch (rel[i]) {
      case Relation::LessEq:
        t.at(i, next_slack) = 1;
        t.basis()[i] = next_slack++;
        break;
      case Relation::GreaterEq:
        t.at(i, next_slack++) = -1;
        t.at(i, next_art) = 1;
        t.basis()[i] = next_art++;
        break;
      case Relation::Equal:
        t.at(i, next_art) = 1;
        t.basis()[i] = next_art++;
        break;
    }
  }

  LpResult result;
  if (num_art > 0) {
    RationalVector phase1(ncols);
    for (std::size_t j = art_begin; j < ncols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.run(ncols);
    if (sgn(t.objective_value()) < 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis()[i] < art_begin) {
        ++i;
        continue;
      }
      std::size_t col = art_begin;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (sgn(t.at(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col == art_begin) {
        t.erase_row(i);  // redundant equality
      } else {
        t.pivot(i, col);
        ++i;
      }
    }
  }

  if (!objective.empty()) {
    RationalVector phase2(ncols);
    for (std::size_t j = 0; j < num_vars; ++j) {
      phase2[j] = objective[j];
      phase2[num_vars + j] = -objective[j];
    }
    t.set_objective(phase2);
    if (!t.run(art_begin)) {
      result.status = LpStatus::Unbounded;
      return result;
    }
  }

  RationalVector full(ncols);
  for (std::size_t i = 0; i < t.rows(); ++i) full[t.basis()[i]] = t.rhs(i);
  result.point.resize(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) result.point[j] = full[j] - full[num_vars + j];
  result.value = 0;
  for (std::size_t j = 0; j < objective.size(); ++j) result.value += objective[j] * result.point[j];
  result.status = LpStatus::Optimal;
  return result;
}

}  // namespace trophyp
