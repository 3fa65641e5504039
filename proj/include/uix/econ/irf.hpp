// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "uix/econ/var.hpp"

namespace uix::econ {

/// Lower-triangular L with L L^T = sigma. Rejects asymmetric input and
/// pivots at or below 1e-12 times the largest diagonal entry.
Eigen::MatrixXd cholesky_factor(const Eigen::MatrixXd& sigma);

/// MA coefficient matrices Psi_0 = I, Psi_h = sum_{i<=min(h,p)} A_i Psi_{h-i}.
std::vector<Eigen::MatrixXd> ma_coefficients(const VarModel& model, int horizon);

/// Orthogonalized responses Theta_h = Psi_h L for h = 0..horizon; entry
/// (i, j) is variable i's response to one orthogonalized unit of shock j
/// (a one-standard-deviation shock). Theta_0 is the Cholesky factor itself.
std::vector<Eigen::MatrixXd> impulse_response(const VarModel& model, int horizon);

struct BootstrapOptions {
  int reps = 999;
  double level = 90.0;  // central confidence level in percent
  std::uint64_t seed = 0;
  int threads = 1;      // <= 0 selects hardware concurrency
  bool keep_draws = false;
};

/// Point responses with percentile bootstrap bands. lower <= upper holds
/// cell-wise; the point estimate may fall outside the band in finite
/// samples.
struct IrfResult {
  int horizon = 0;
  std::vector<Eigen::MatrixXd> point;  // Theta_h, h = 0..horizon
  std::vector<Eigen::MatrixXd> lower;
  std::vector<Eigen::MatrixXd> upper;
  int reps_requested = 0;
  int reps_used = 0;
  int reps_discarded = 0;
  double level = 0.0;
  std::uint64_t seed = 0;
  // Successful replications' responses in replication order when
  // keep_draws was set; each entry is flattened horizon-major, then
  // response, then shock.
  std::vector<std::vector<double>> draws;
};

/// Residual recursive-design bootstrap: centered residuals are resampled
/// with replacement, a pseudo-series is rebuilt from the estimated model
/// with the original first p observations, the model is refit, and the IRF
/// recomputed. Bands are cell-wise empirical percentiles (linear
/// interpolation between order statistics). Each replication draws from
/// its own mt19937_64 substream keyed by (seed, replication index), so
/// serial and parallel runs agree bit for bit. Replications whose refit
/// fails are discarded; more than 10% discarded is an error.
IrfResult bootstrap_irf(const VarModel& model, const Eigen::MatrixXd& data, int horizon,
                        const BootstrapOptions& options);

/// Quantile with linear interpolation between order statistics (type 7);
/// q in [0, 1], values need not be sorted.
double quantile_type7(std::vector<double> values, double q);

}  // namespace uix::econ
