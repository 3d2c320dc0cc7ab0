#pragma once

#include <span>
#include <vector>

#include "antisym/rational.hpp"

namespace antisym::exact {

enum class ConstraintSense { LessEq, Equal, GreaterEq };
enum class VarBound { NonNegative, Free };
enum class ObjectiveSense { Maximize, Minimize };

/// A linear program in exact rationals. Rows are constraints, columns are
/// variables. Variables are nonnegative unless marked Free.
struct RationalLP {
  ObjectiveSense sense = ObjectiveSense::Maximize;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<ConstraintSense> row_sense;
  std::vector<Rational> rhs;
  std::vector<VarBound> var_bounds;  // empty means all NonNegative

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  void add_constraint(std::vector<Rational> coeffs, ConstraintSense s, Rational b) {
    rows.push_back(std::move(coeffs));
    row_sense.push_back(s);
    rhs.push_back(std::move(b));
  }

  VarBound bound(int j) const {
    return var_bounds.empty() ? VarBound::NonNegative : var_bounds.at(static_cast<size_t>(j));
  }

  /// Throws InputError if the dimensions of A, b, c are inconsistent.
  void validate() const;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// Exact solution of a RationalLP. When status == Optimal both points are
/// populated, their objective values coincide exactly, and complementary
/// slackness holds exactly.
///
/// Dual sign convention: `dual[i]` multiplies constraint i in the Lagrangian
/// of the stated problem, so that rhs . dual == value. For a maximization,
/// dual[i] >= 0 on LessEq rows and dual[i] <= 0 on GreaterEq rows; for a
/// minimization the signs flip.
struct LPSolution {
  LPStatus status = LPStatus::Optimal;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  long pivots = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's anti-cycling
/// rule. The dual point is recovered from the final basis.
LPSolution solve_lp(const RationalLP& lp);

/// Exact feasibility check of a point against every constraint and variable
/// bound. Throws InputError on a dimension mismatch.
bool verify_feasible(const RationalLP& lp, std::span<const Rational> point);

}  // namespace antisym::exact
