#pragma once

// Componentwise-minimal nonnegative integer solutions of linear systems,
// via the Contejean-Devie completion procedure (breadth-first frontier with
// the scalar-product descent criterion). This is the feasibility and
// staircase-generator primitive used throughout the semigroup machinery.

#include "gkz/exactla.hpp"

namespace gkz {

// All componentwise-minimal x in N^cols with m x = rhs.
// rhs = 0 yields {0} (the literal minimum); use minimal_nonzero_homogeneous
// for the generators of the solution monoid.
std::vector<IntVec> minimal_nonneg_solutions(const IntMat& m, const IntVec& rhs);

// Minimal nonzero solutions of m x = 0, x >= 0.
std::vector<IntVec> minimal_nonzero_homogeneous(const IntMat& m);

// Does m x = rhs admit any x >= 0 integer solution?
bool has_nonneg_solution(const IntMat& m, const IntVec& rhs);

}  // namespace gkz
