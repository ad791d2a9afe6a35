#include "tg/lp.hpp"

#include <string>

#include "tg/error.hpp"

namespace tg {

void LinearProgram::add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::validate() const {
  if (variables < 0) throw InvalidInput("negative variable count");
  if (objective.size() != static_cast<std::size_t>(variables)) {
    throw InvalidInput("objective length differs from variable count");
  }
  if (nonnegative.size() != static_cast<std::size_t>(variables)) {
    throw InvalidInput("nonnegativity flags differ from variable count");
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].coefficients.size() != static_cast<std::size_t>(variables)) {
      throw InvalidInput("constraint " + std::to_string(i) + " has wrong length");
    }
  }
}

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal:
      return "optimal";
    case LpStatus::infeasible:
      return "infeasible";
    case LpStatus::unbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<Rational>(cols)), rhs_(rows), basis_(rows, -1), cost_(cols) {}

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<Rational> cost_;     // current phase costs
  std::vector<Rational> reduced_;  // reduced costs
  std::vector<char> blocked_;      // columns not allowed to enter
  std::size_t pivots_ = 0;

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cost_.size(); }

  void price() {
    reduced_ = cost_;
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(a_[i][j]) != 0) reduced_[j] -= cb * a_[i][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    const Rational inv = 1 / a_[r][c];
    for (auto& v : a_[r]) {
      if (sgn(v) != 0) v *= inv;
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(a_[r][j]) != 0) a_[i][j] -= f * a_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (sgn(reduced_[c]) != 0) {
      const Rational f = reduced_[c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(a_[r][j]) != 0) reduced_[j] -= f * a_[r][j];
      }
    }
    basis_[r] = static_cast<int>(c);
  }

  // Bland's rule. Returns false when the phase is unbounded.
  bool optimise() {
    while (true) {
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!blocked_[j] && sgn(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols()) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        Rational ratio = rhs_[i] / a_[i][enter];
        if (leave == rows() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution solve_lp_exact(const LinearProgram& lp) {
  lp.validate();
  const std::size_t m = lp.constraints.size();

  // Structural columns: one per nonnegative variable, two per free one.
  std::vector<int> plus_col(lp.variables), minus_col(lp.variables, -1);
  std::size_t structural = 0;
  for (int j = 0; j < lp.variables; ++j) {
    plus_col[j] = static_cast<int>(structural++);
    if (!lp.nonnegative[j]) minus_col[j] = static_cast<int>(structural++);
  }
  std::vector<char> flipped(m, 0);
  std::vector<Relation> rel(m);
  std::size_t slack_count = 0, art_count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = lp.constraints[i].relation;
    if (sgn(lp.constraints[i].rhs) < 0) {
      flipped[i] = 1;
      if (rel[i] == Relation::less_equal) {
        rel[i] = Relation::greater_equal;
      } else if (rel[i] == Relation::greater_equal) {
        rel[i] = Relation::less_equal;
      }
    }
    if (rel[i] != Relation::equal) ++slack_count;
    if (rel[i] != Relation::less_equal) ++art_count;
  }
  const std::size_t slack_begin = structural;
  const std::size_t art_begin = slack_begin + slack_count;
  const std::size_t cols = art_begin + art_count;

  Tableau t(m, cols);
  t.blocked_.assign(cols, 0);
  std::vector<std::size_t> unit_col(m);  // column that started as e_i
  std::size_t next_slack = slack_begin, next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    const int sign = flipped[i] ? -1 : 1;
    for (int j = 0; j < lp.variables; ++j) {
      if (sgn(row.coefficients[j]) == 0) continue;
      t.a_[i][plus_col[j]] = sign * row.coefficients[j];
      if (minus_col[j] >= 0) t.a_[i][minus_col[j]] = -sign * row.coefficients[j];
    }
    t.rhs_[i] = sign * row.rhs;
    if (rel[i] == Relation::less_equal) {
      t.a_[i][next_slack] = 1;
      unit_col[i] = next_slack;
      t.basis_[i] = static_cast<int>(next_slack++);
    } else {
      if (rel[i] == Relation::greater_equal) t.a_[i][next_slack++] = -1;
      t.a_[i][next_art] = 1;
      unit_col[i] = next_art;
      t.basis_[i] = static_cast<int>(next_art++);
    }
  }

  LpSolution sol;
  // Phase 1: drive the artificial variables to zero.
  if (art_count > 0) {
    for (std::size_t j = art_begin; j < cols; ++j) t.cost_[j] = 1;
    t.price();
    t.optimise();  // bounded below by 0
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<std::size_t>(t.basis_[i]) >= art_begin) infeasibility += t.rhs_[i];
    }
    if (sgn(infeasibility) > 0) {
      sol.status = LpStatus::infeasible;
      sol.pivots = t.pivots_;
      return sol;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<std::size_t>(t.basis_[i]) < art_begin) continue;
      for (std::size_t j = 0; j < art_begin; ++j) {
        if (sgn(t.a_[i][j]) != 0) {
          t.pivot(i, j);
          break;
        }
      }
      // Otherwise the row is redundant; its artificial stays basic at 0.
    }
    for (std::size_t j = art_begin; j < cols; ++j) t.blocked_[j] = 1;
  }

  // Phase 2.
  std::fill(t.cost_.begin(), t.cost_.end(), Rational(0));
  for (int j = 0; j < lp.variables; ++j) {
    t.cost_[plus_col[j]] = lp.objective[j];
    if (minus_col[j] >= 0) t.cost_[minus_col[j]] = -lp.objective[j];
  }
  t.price();
  const bool bounded = t.optimise();
  sol.pivots = t.pivots_;
  if (!bounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  std::vector<Rational> column_value(cols);
  for (std::size_t i = 0; i < m; ++i) column_value[t.basis_[i]] = t.rhs_[i];
  sol.status = LpStatus::optimal;
  sol.x.resize(lp.variables);
  sol.objective = 0;
  for (int j = 0; j < lp.variables; ++j) {
    sol.x[j] = column_value[plus_col[j]];
    if (minus_col[j] >= 0) sol.x[j] -= column_value[minus_col[j]];
    sol.objective += lp.objective[j] * sol.x[j];
  }
  sol.duals.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    // The unit column now holds B^-1 e_i and has zero phase-2 cost, so its
    // reduced cost is -y_i.
    Rational y = -t.reduced_[unit_col[i]];
    sol.duals[i] = flipped[i] ? Rational(-y) : y;
  }
  return sol;
}

}  // namespace tg
