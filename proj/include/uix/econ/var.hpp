// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uix/econ/panel.hpp"

namespace uix::econ {

/// A fitted VAR(p): y_t = c + A_1 y_{t-1} + ... + A_p y_{t-p} + e_t,
/// estimated equation by equation by least squares with intercept.
/// sigma uses divisor T - p (effective observation count, no per-equation
/// parameter correction).
struct VarModel {
  int lag_order = 0;
  Eigen::VectorXd intercept;             // k
  std::vector<Eigen::MatrixXd> coef;     // A_1..A_p, each k x k
  Eigen::MatrixXd sigma;                 // k x k residual covariance
  Eigen::MatrixXd residuals;             // (T - p) x k
  int n_obs = 0;                         // effective observations T - p

  int dim() const { return static_cast<int>(intercept.size()); }

  /// Spectral radius of the companion matrix; < 1 means stable.
  double spectral_radius() const;
  bool stable() const { return spectral_radius() < 1.0; }
};

/// Fits a VAR(p) on data rows ordered oldest-first. Rejects rank-deficient
/// regressor matrices and samples too short for the parameter count.
VarModel fit_var(const Eigen::MatrixXd& data, int p);
VarModel fit_var(const MacroPanel& panel, int p);

enum class Criterion { AIC, BIC, HQ };

Criterion parse_criterion(const std::string& name);
const char* criterion_name(Criterion c);

/// Fits VAR(1..p_max) on the common sample (observations from p_max on)
/// and returns the argmin of the criterion; ties go to the smaller order.
int select_lag(const Eigen::MatrixXd& data, int p_max, Criterion criterion = Criterion::AIC);

}  // namespace uix::econ
