#pragma once

#include "maplaw/rational.hpp"

#include <vector>

namespace maplaw::lp {

// Dense two-phase simplex over exact rationals, for the desk-scale
// programs behind separability certificates. Bland's rule, so it
// terminates on degenerate programs too.
//
//   maximize objective . x   subject to   constraints x = rhs,  x >= 0

enum class Status { optimal, infeasible, unbounded };

struct Problem {
  std::vector<std::vector<Rational>> constraints;  // row-major, m x n
  std::vector<Rational> rhs;                       // length m
  std::vector<Rational> objective;                 // length n
};

struct Solution {
  Status status = Status::infeasible;
  std::vector<Rational> x;
  Rational objective_value;
};

Solution solve(const Problem& problem);

}  // namespace maplaw::lp
