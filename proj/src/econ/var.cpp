// SPDX-License-Identifier: Apache-2.0
#include "uix/econ/var.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "uix/errors.hpp"

namespace uix::econ {

double VarModel::spectral_radius() const {
  const int k = dim();
  const int p = lag_order;
  if (k == 0 || p == 0) return 0.0;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k * p, k * p);
  for (int l = 0; l < p; ++l) {
    companion.block(0, l * k, k, k) = coef[static_cast<std::size_t>(l)];
  }
  if (p > 1) {
    companion.block(k, 0, k * (p - 1), k * (p - 1)) =
        Eigen::MatrixXd::Identity(k * (p - 1), k * (p - 1));
  }
  return companion.eigenvalues().cwiseAbs().maxCoeff();
}

VarModel fit_var(const Eigen::MatrixXd& data, int p) {
  const int T = static_cast<int>(data.rows());
  const int k = static_cast<int>(data.cols());
  if (p < 1) throw Error("var: lag order must be >= 1");
  if (k < 1) throw Error("var: no variables");
  const int m = k * p + 1;  // regressors per equation
  const int n = T - p;      // effective observations
  if (n <= m) {
    throw Error("var: sample too short: " + std::to_string(T) + " rows for k=" +
                std::to_string(k) + ", p=" + std::to_string(p));
  }

  Eigen::MatrixXd Z(n, m);
  Eigen::MatrixXd Y(n, k);
  for (int t = p; t < T; ++t) {
    const int r = t - p;
    Z(r, 0) = 1.0;
    for (int l = 1; l <= p; ++l) {
      Z.block(r, 1 + (l - 1) * k, 1, k) = data.row(t - l);
    }
    Y.row(r) = data.row(t);
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Z);
  if (qr.rank() < m) {
    throw Error("var: regressor matrix is rank-deficient (collinear or constant series)");
  }
  const Eigen::MatrixXd B = qr.solve(Y);  // m x k
  const Eigen::MatrixXd E = Y - Z * B;

  VarModel model;
  model.lag_order = p;
  model.n_obs = n;
  model.intercept = B.row(0).transpose();
  model.coef.reserve(static_cast<std::size_t>(p));
  for (int l = 1; l <= p; ++l) {
    model.coef.push_back(B.block(1 + (l - 1) * k, 0, k, k).transpose());
  }
  model.residuals = E;
  model.sigma = (E.transpose() * E) / static_cast<double>(n);
  return model;
}

VarModel fit_var(const MacroPanel& panel, int p) { return fit_var(panel.values, p); }

Criterion parse_criterion(const std::string& name) {
  if (name == "aic" || name == "AIC") return Criterion::AIC;
  if (name == "bic" || name == "BIC") return Criterion::BIC;
  if (name == "hq" || name == "HQ") return Criterion::HQ;
  throw Error("var: unknown information criterion '" + name + "'");
}

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::AIC: return "aic";
    case Criterion::BIC: return "bic";
    case Criterion::HQ: return "hq";
  }
  return "?";
}

namespace {

double log_det(const Eigen::MatrixXd& sigma) {
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(sigma);
  const double det = lu.determinant();
  if (!(det > 0.0)) return std::numeric_limits<double>::infinity();
  return std::log(det);
}

}  // namespace

int select_lag(const Eigen::MatrixXd& data, int p_max, Criterion criterion) {
  const int T = static_cast<int>(data.rows());
  const int k = static_cast<int>(data.cols());
  if (p_max < 1) throw Error("var: p_max must be >= 1");
  const int n = T - p_max;  // common effective sample for all candidates
  if (n <= k * p_max + 1) {
    throw Error("var: p_max=" + std::to_string(p_max) + " infeasible for " +
                std::to_string(T) + " rows of " + std::to_string(k) + " variables");
  }

  int best_p = 1;
  double best_ic = std::numeric_limits<double>::infinity();
  for (int p = 1; p <= p_max; ++p) {
    // Drop leading rows so every candidate fits on observations p_max..T-1.
    const Eigen::MatrixXd sub = data.bottomRows(T - p_max + p);
    const VarModel model = fit_var(sub, p);
    const double params = static_cast<double>(k * (k * p + 1));
    double penalty = 0.0;
    switch (criterion) {
      case Criterion::AIC: penalty = 2.0; break;
      case Criterion::BIC: penalty = std::log(static_cast<double>(n)); break;
      case Criterion::HQ: penalty = 2.0 * std::log(std::log(static_cast<double>(n))); break;
    }
    const double ic = log_det(model.sigma) + penalty * params / static_cast<double>(n);
    if (ic < best_ic) {
      best_ic = ic;
      best_p = p;
    }
  }
  return best_p;
}

}  // namespace uix::econ
