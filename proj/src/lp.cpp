#include "antisym/lp.hpp"

#include <algorithm>
#include <cstddef>

namespace antisym::exact {

void RationalLP::validate() const {
  const size_t n = objective.size();
  if (n == 0) throw InputError("RationalLP: no variables");
  if (rows.size() != rhs.size() || rows.size() != row_sense.size())
    throw InputError("RationalLP: row/rhs/sense count mismatch");
  for (const auto& row : rows)
    if (row.size() != n) throw InputError("RationalLP: row width != variable count");
  if (!var_bounds.empty() && var_bounds.size() != n)
    throw InputError("RationalLP: var_bounds size mismatch");
}

bool verify_feasible(const RationalLP& lp, std::span<const Rational> point) {
  lp.validate();
  if (point.size() != static_cast<size_t>(lp.num_vars()))
    throw InputError("verify_feasible: point has wrong dimension");
  for (int j = 0; j < lp.num_vars(); ++j)
    if (lp.bound(j) == VarBound::NonNegative && point[static_cast<size_t>(j)].sign() < 0) return false;
  for (int i = 0; i < lp.num_rows(); ++i) {
    Rational lhs(0);
    for (int j = 0; j < lp.num_vars(); ++j)
      lhs += lp.rows[static_cast<size_t>(i)][static_cast<size_t>(j)] * point[static_cast<size_t>(j)];
    const Rational& b = lp.rhs[static_cast<size_t>(i)];
    switch (lp.row_sense[static_cast<size_t>(i)]) {
      case ConstraintSense::LessEq:
        if (lhs > b) return false;
        break;
      case ConstraintSense::Equal:
        if (lhs != b) return false;
        break;
      case ConstraintSense::GreaterEq:
        if (lhs < b) return false;
        break;
    }
  }
  return true;
}

namespace {

// Dense exact simplex tableau. Columns: structural (with free variables split
// into x+ - x-), then slacks, then one artificial per row so the artificial
// block of the final tableau is B^{-1} and the dual point can be read off the
// objective row.
class Tableau {
 public:
  explicit Tableau(const RationalLP& lp) : lp_(lp) {
    const int n = lp.num_vars();
    m_ = lp.num_rows();

    for (int j = 0; j < n; ++j) {
      pos_col_.push_back(next_col_++);
      neg_col_.push_back(lp.bound(j) == VarBound::Free ? next_col_++ : -1);
    }
    slack_col_.assign(static_cast<size_t>(m_), -1);
    for (int i = 0; i < m_; ++i)
      if (lp.row_sense[static_cast<size_t>(i)] != ConstraintSense::Equal) slack_col_[static_cast<size_t>(i)] = next_col_++;
    art_col_.resize(static_cast<size_t>(m_));
    for (int i = 0; i < m_; ++i) art_col_[static_cast<size_t>(i)] = next_col_++;
    ncols_ = next_col_;
    first_art_ = art_col_.empty() ? ncols_ : art_col_[0];

    rows_.assign(static_cast<size_t>(m_), std::vector<Rational>(static_cast<size_t>(ncols_ + 1)));
    flipped_.assign(static_cast<size_t>(m_), false);
    basis_.resize(static_cast<size_t>(m_));

    for (int i = 0; i < m_; ++i) {
      auto& row = rows_[static_cast<size_t>(i)];
      for (int j = 0; j < n; ++j) {
        const Rational& a = lp.rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        row[static_cast<size_t>(pos_col_[static_cast<size_t>(j)])] = a;
        if (neg_col_[static_cast<size_t>(j)] >= 0) row[static_cast<size_t>(neg_col_[static_cast<size_t>(j)])] = -a;
      }
      if (slack_col_[static_cast<size_t>(i)] >= 0)
        row[static_cast<size_t>(slack_col_[static_cast<size_t>(i)])] =
            lp.row_sense[static_cast<size_t>(i)] == ConstraintSense::LessEq ? Rational(1) : Rational(-1);
      row[static_cast<size_t>(ncols_)] = lp.rhs[static_cast<size_t>(i)];
      if (row[static_cast<size_t>(ncols_)].sign() < 0) {
        for (auto& v : row) v = -v;
        flipped_[static_cast<size_t>(i)] = true;
      }
      row[static_cast<size_t>(art_col_[static_cast<size_t>(i)])] = Rational(1);
      basis_[static_cast<size_t>(i)] = art_col_[static_cast<size_t>(i)];
    }
  }

  LPSolution run() {
    LPSolution sol;

    // Phase 1: maximize -sum(artificials).
    std::vector<Rational> cost1(static_cast<size_t>(ncols_));
    for (int c : art_col_) cost1[static_cast<size_t>(c)] = Rational(-1);
    recompute_objective(cost1);
    const bool bounded1 = bland_loop(/*allow_artificial=*/true);
    (void)bounded1;  // phase-1 objective is bounded above by 0
    if (z_rhs_.sign() < 0) {
      sol.status = LPStatus::Infeasible;
      sol.pivots = pivots_;
      return sol;
    }
    drive_out_artificials();

    // Phase 2: the canonical (maximize) objective over structural columns.
    std::vector<Rational> cost2(static_cast<size_t>(ncols_));
    const bool maximize = lp_.sense == ObjectiveSense::Maximize;
    for (int j = 0; j < lp_.num_vars(); ++j) {
      Rational c = lp_.objective[static_cast<size_t>(j)];
      if (!maximize) c = -c;
      cost2[static_cast<size_t>(pos_col_[static_cast<size_t>(j)])] = c;
      if (neg_col_[static_cast<size_t>(j)] >= 0) cost2[static_cast<size_t>(neg_col_[static_cast<size_t>(j)])] = -c;
    }
    recompute_objective(cost2);
    if (!bland_loop(/*allow_artificial=*/false)) {
      sol.status = LPStatus::Unbounded;
      sol.pivots = pivots_;
      return sol;
    }

    sol.status = LPStatus::Optimal;
    sol.primal.assign(static_cast<size_t>(lp_.num_vars()), Rational(0));
    std::vector<Rational> xstd(static_cast<size_t>(ncols_));
    for (int i = 0; i < m_; ++i) xstd[static_cast<size_t>(basis_[static_cast<size_t>(i)])] = rows_[static_cast<size_t>(i)][static_cast<size_t>(ncols_)];
    for (int j = 0; j < lp_.num_vars(); ++j) {
      Rational x = xstd[static_cast<size_t>(pos_col_[static_cast<size_t>(j)])];
      if (neg_col_[static_cast<size_t>(j)] >= 0) x -= xstd[static_cast<size_t>(neg_col_[static_cast<size_t>(j)])];
      sol.primal[static_cast<size_t>(j)] = x;
    }
    for (int j = 0; j < lp_.num_vars(); ++j) sol.value += lp_.objective[static_cast<size_t>(j)] * sol.primal[static_cast<size_t>(j)];

    // Dual point: y = c_B B^{-1}, read from the objective row under the
    // artificial columns (their cost is zero in phase 2).
    sol.dual.assign(static_cast<size_t>(m_), Rational(0));
    for (int i = 0; i < m_; ++i) {
      Rational y = z_[static_cast<size_t>(art_col_[static_cast<size_t>(i)])];
      if (flipped_[static_cast<size_t>(i)]) y = -y;
      if (!maximize) y = -y;
      sol.dual[static_cast<size_t>(i)] = y;
    }
    sol.pivots = pivots_;
    return sol;
  }

 private:
  void recompute_objective(const std::vector<Rational>& cost) {
    cost_ = cost;
    z_.assign(static_cast<size_t>(ncols_), Rational(0));
    z_rhs_ = Rational(0);
    for (int j = 0; j <= ncols_; ++j) {
      Rational acc(0);
      for (int i = 0; i < m_; ++i) {
        const Rational& cb = cost_[static_cast<size_t>(basis_[static_cast<size_t>(i)])];
        if (!cb.is_zero()) acc += cb * rows_[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
      if (j == ncols_)
        z_rhs_ = acc;
      else
        z_[static_cast<size_t>(j)] = acc - cost_[static_cast<size_t>(j)];
    }
  }

  void pivot(int r, int s) {
    auto& prow = rows_[static_cast<size_t>(r)];
    const Rational piv = prow[static_cast<size_t>(s)];
    for (auto& v : prow) v /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      auto& row = rows_[static_cast<size_t>(i)];
      const Rational f = row[static_cast<size_t>(s)];
      if (f.is_zero()) continue;
      for (int j = 0; j <= ncols_; ++j) row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
    }
    const Rational fz = z_[static_cast<size_t>(s)];
    if (!fz.is_zero()) {
      for (int j = 0; j < ncols_; ++j) z_[static_cast<size_t>(j)] -= fz * prow[static_cast<size_t>(j)];
      z_rhs_ -= fz * prow[static_cast<size_t>(ncols_)];
    }
    basis_[static_cast<size_t>(r)] = s;
    ++pivots_;
  }

  // Bland's rule: entering = lowest-index column with negative reduced cost,
  // leaving = min ratio with ties broken by lowest basic variable index.
  // Returns false when the objective is unbounded.
  bool bland_loop(bool allow_artificial) {
    for (;;) {
      int s = -1;
      const int limit = allow_artificial ? ncols_ : first_art_;
      for (int j = 0; j < limit; ++j) {
        if (z_[static_cast<size_t>(j)].sign() < 0) {
          s = j;
          break;
        }
      }
      if (s < 0) return true;
      int r = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        const Rational& a = rows_[static_cast<size_t>(i)][static_cast<size_t>(s)];
        if (a.sign() <= 0) continue;
        Rational ratio = rows_[static_cast<size_t>(i)][static_cast<size_t>(ncols_)] / a;
        if (r < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(r)])) {
          r = i;
          best_ratio = ratio;
        }
      }
      if (r < 0) return false;
      pivot(r, s);
    }
  }

  // After a feasible phase 1, pivot artificial variables out of the basis.
  // A row whose non-artificial entries are all zero is redundant; its
  // artificial stays basic at level zero and never changes again.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[static_cast<size_t>(i)] < first_art_) continue;
      for (int j = 0; j < first_art_; ++j) {
        if (!rows_[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  const RationalLP& lp_;
  int m_ = 0;
  int ncols_ = 0;
  int next_col_ = 0;
  int first_art_ = 0;
  std::vector<int> pos_col_, neg_col_, slack_col_, art_col_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> z_, cost_;
  Rational z_rhs_;
  std::vector<int> basis_;
  std::vector<bool> flipped_;
  long pivots_ = 0;
};

}  // namespace

LPSolution solve_lp(const RationalLP& lp) {
  lp.validate();
  Tableau t(lp);
  return t.run();
}

}  // namespace antisym::exact
