#pragma once

#include <vector>

#include "rootlab/linalg.hpp"

namespace rootlab {

// Exact feasibility of { A x = b, 0 <= x_i <= upper_i } by phase-1 simplex
// with Bland's rule. A is given by columns; all arithmetic is rational.
bool box_lp_feasible(const std::vector<QVec>& columns, const QVec& b, const std::vector<Rational>& upper);

}  // namespace rootlab
