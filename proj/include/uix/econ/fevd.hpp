// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "uix/econ/var.hpp"

namespace uix::econ {

/// Forecast-error variance decomposition shares in percent.
/// shares[h-1](i, j) is the fraction of variable i's h-step forecast-error
/// variance attributed to orthogonalized shock j; each row sums to 100.
struct FevdTable {
  int horizon = 0;
  std::vector<Eigen::MatrixXd> shares;  // h = 1..horizon
};

/// Cholesky FEVD: share_ij(h) = 100 * sum_{s<h} Theta_s(i,j)^2 /
/// sum_{s<h} sum_j Theta_s(i,j)^2. Rejects variables with zero total
/// forecast-error variance.
FevdTable fevd(const VarModel& model, int horizon);

}  // namespace uix::econ
