#pragma once

// Exact linear programming over the rationals. Dense two-phase simplex with
// Bland's rule, so it terminates on degenerate problems. Variables are free.

#include <optional>
#include <span>
#include <vector>

#include "trophyp/rational.hpp"

namespace trophyp {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  RationalVector coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVector point;  // a feasible (optimal when requested) point
  Rational value;        // objective value at point
};

/// Maximizes objective . x subject to the constraints. An empty objective
/// means "find any feasible point".
LpResult solve_lp(std::size_t num_vars, std::span<const LinearConstraint> constraints,
                  std::span<const Rational> objective = {});

inline bool lp_feasible(std::size_t num_vars, std::span<const LinearConstraint> constraints) {
  return solve_lp(num_vars, constraints).status != LpStatus::Infeasible;
}

}  // namespace trophyp
