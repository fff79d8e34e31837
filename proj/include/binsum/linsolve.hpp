#pragma once

#include <vector>

#include "binsum/ratfun.hpp"

namespace binsum {

using RatFunMatrix = std::vector<std::vector<RatFun>>;

/// Solves A x = rhs exactly over Q(k) by Gaussian elimination. The pivot in
/// each column is the nonzero candidate of lowest degree (deg num + deg den),
/// which keeps intermediate degrees near-minimal. Throws SingularMatrixError
/// carrying the elimination stage when no pivot exists.
std::vector<RatFun> solve_linear_system(RatFunMatrix A, std::vector<RatFun> rhs);

}  // namespace binsum
