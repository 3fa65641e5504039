// SPDX-License-Identifier: Apache-2.0
#include "uix/econ/fevd.hpp"

#include "uix/econ/irf.hpp"
#include "uix/errors.hpp"

namespace uix::econ {

FevdTable fevd(const VarModel& model, int horizon) {
  if (horizon < 1) throw Error("fevd: horizon must be >= 1");
  const int k = model.dim();
  const auto theta = impulse_response(model, horizon - 1);

  FevdTable table;
  table.horizon = horizon;
  table.shares.reserve(static_cast<std::size_t>(horizon));

  // cum(i, j) accumulates sum_{s<h} Theta_s(i,j)^2.
  Eigen::MatrixXd cum = Eigen::MatrixXd::Zero(k, k);
  for (int h = 1; h <= horizon; ++h) {
    cum += theta[static_cast<std::size_t>(h - 1)].array().square().matrix();
    Eigen::MatrixXd shares(k, k);
    for (int i = 0; i < k; ++i) {
      double total = 0.0;
      for (int j = 0; j < k; ++j) total += cum(i, j);
      if (!(total > 0.0)) {
        throw Error("fevd: zero forecast-error variance for variable " + std::to_string(i));
      }
      for (int j = 0; j < k; ++j) shares(i, j) = 100.0 * (cum(i, j) / total);
    }
    table.shares.push_back(std::move(shares));
  }
  return table;
}

}  // namespace uix::econ
