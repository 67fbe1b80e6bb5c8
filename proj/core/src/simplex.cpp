#include "maplaw/simplex.hpp"

#include "maplaw/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace maplaw::lp {

namespace {

// Tableau layout: columns [structural | artificial | rhs]; one basic
// variable per row. Phase I minimizes the artificial sum, phase II the
// caller's objective restricted to structural columns.
class Tableau {
 public:
  Tableau(const Problem& p)
      : rows_(p.constraints.size()), structural_(p.objective.size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (p.constraints[i].size() != structural_) {
        raise(Errc::invalid_argument, "constraint row width mismatch");
      }
    }
    cols_ = structural_ + rows_ + 1;
    cells_.assign(rows_, std::vector<Rational>(cols_, Rational(0)));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = p.rhs[i] < 0;
      for (std::size_t j = 0; j < structural_; ++j) {
        cells_[i][j] = flip ? Rational(-p.constraints[i][j]) : p.constraints[i][j];
      }
      cells_[i][structural_ + i] = Rational(1);
      cells_[i][cols_ - 1] = flip ? Rational(-p.rhs[i]) : p.rhs[i];
      basis_[i] = structural_ + i;
    }
  }

  // max c.x for the given reduced objective; returns false on unbounded.
  bool optimize(const std::vector<Rational>& objective, bool allow_artificials) {
    // price row: z_j - c_j kept implicitly; recompute reduced costs on
    // demand (desk-scale problems, clarity over micro-optimization).
    while (true) {
      std::size_t entering = cols_;  // sentinel
      const std::size_t limit = allow_artificials ? cols_ - 1 : structural_;
      for (std::size_t j = 0; j < limit; ++j) {  // Bland: first improving column
        if (is_basic(j)) continue;
        if (reduced_cost(objective, j) > 0) {
          entering = j;
          break;
        }
      }
      if (entering == cols_) return true;  // optimal

      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (cells_[i][entering] <= 0) continue;
        Rational ratio = cells_[i][cols_ - 1] / cells_[i][entering];
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {  // Bland tie-break
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_) return false;  // unbounded direction
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / cells_[row][col];
    for (auto& cell : cells_[row]) cell *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || cells_[i][col] == 0) continue;
      const Rational factor = cells_[i][col];
      for (std::size_t j = 0; j < cols_; ++j) cells_[i][j] -= factor * cells_[row][j];
    }
    basis_[row] = col;
  }

  Rational reduced_cost(const std::vector<Rational>& objective, std::size_t j) const {
    // c_j - c_B . B^{-1} A_j with the tableau already in basis form.
    Rational cost = objective_at(objective, j);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational basic_cost = objective_at(objective, basis_[i]);
      if (basic_cost != 0) cost -= basic_cost * cells_[i][j];
    }
    return cost;
  }

  Rational objective_at(const std::vector<Rational>& objective, std::size_t j) const {
    return j < objective.size() ? objective[j] : Rational(0);
  }

  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  bool drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) continue;
      if (cells_[i][cols_ - 1] != 0) return false;  // artificial stuck at positive value
      bool pivoted = false;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (cells_[i][j] != 0) {
          pivot(i, j);
          pivoted = true;
          break;
        }
      }
      // A redundant row: the artificial stays basic at zero, harmless.
      (void)pivoted;
    }
    return true;
  }

  std::vector<Rational> extract(std::size_t n) const {
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n) x[basis_[i]] = cells_[i][cols_ - 1];
    }
    return x;
  }

  std::size_t structural() const { return structural_; }

 private:
  std::size_t rows_;
  std::size_t structural_;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const Problem& problem) {
  if (problem.rhs.size() != problem.constraints.size()) {
    raise(Errc::invalid_argument, "rhs length does not match constraint count");
  }

  Tableau tableau(problem);
  const std::size_t n = problem.objective.size();

  // Phase I: maximize -(sum of artificials).
  std::vector<Rational> phase1(n + problem.constraints.size(), Rational(0));
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) phase1[n + i] = Rational(-1);
  if (!tableau.optimize(phase1, true)) {
    throw std::logic_error("phase I of the simplex cannot be unbounded");
  }
  {
    // Feasible iff every artificial ended at zero.
    std::vector<Rational> full = tableau.extract(n + problem.constraints.size());
    for (std::size_t i = n; i < full.size(); ++i) {
      if (full[i] != 0) return Solution{Status::infeasible, {}, Rational(0)};
    }
  }
  if (!tableau.drive_out_artificials()) return Solution{Status::infeasible, {}, Rational(0)};

  // Phase II on the caller's objective.
  if (!tableau.optimize(problem.objective, false)) {
    return Solution{Status::unbounded, {}, Rational(0)};
  }

  Solution out;
  out.status = Status::optimal;
  out.x = tableau.extract(n);
  out.objective_value = Rational(0);
  for (std::size_t j = 0; j < n; ++j) out.objective_value += problem.objective[j] * out.x[j];
  return out;
}

}  // namespace maplaw::lp
