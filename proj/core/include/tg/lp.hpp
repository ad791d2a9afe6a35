#pragma once

#include <string_view>
#include <vector>

#include "tg/rational.hpp"

namespace tg {

enum class Relation { less_equal, greater_equal, equal };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

/// minimize objective·x subject to the constraints; variables flagged
/// nonnegative are bounded below by 0, the others are free.
struct LinearProgram {
  int variables = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonnegative;

  explicit LinearProgram(int vars = 0)
      : variables(vars), objective(vars), nonnegative(vars, true) {}

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs);
  /// Throws InvalidInput on inconsistent dimensions.
  void validate() const;
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string_view to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  /// A basic optimal solution (empty unless optimal).
  std::vector<Rational> x;
  /// Shadow prices d(objective)/d(rhs_i), one per constraint.
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex over exact rationals with Bland's rule.
LpSolution solve_lp_exact(const LinearProgram& lp);

}  // namespace tg
