// SPDX-License-Identifier: Apache-2.0
#include "uix/econ/irf.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "uix/errors.hpp"

namespace uix::econ {

Eigen::MatrixXd cholesky_factor(const Eigen::MatrixXd& sigma) {
  const int k = static_cast<int>(sigma.rows());
  if (sigma.cols() != k) throw Error("cholesky: matrix is not square");
  const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (std::abs(sigma(i, j) - sigma(j, i)) > 1e-9 * scale) {
        throw Error("cholesky: matrix is not symmetric");
      }
    }
  }
  // Pivot must exceed 1e-12 times the largest diagonal entry.
  const double tol = 1e-12 * std::max(0.0, sigma.diagonal().maxCoeff());

  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(k, k);
  for (int j = 0; j < k; ++j) {
    double d = sigma(j, j);
    for (int s = 0; s < j; ++s) d -= L(j, s) * L(j, s);
    if (!(d > tol)) throw Error("cholesky: matrix is not positive definite");
    L(j, j) = std::sqrt(d);
    for (int i = j + 1; i < k; ++i) {
      double v = sigma(i, j);
      for (int s = 0; s < j; ++s) v -= L(i, s) * L(j, s);
      L(i, j) = v / L(j, j);
    }
  }
  return L;
}

std::vector<Eigen::MatrixXd> ma_coefficients(const VarModel& model, int horizon) {
  if (horizon < 0) throw Error("irf: horizon must be >= 0");
  const int k = model.dim();
  const int p = model.lag_order;
  std::vector<Eigen::MatrixXd> psi;
  psi.reserve(static_cast<std::size_t>(horizon) + 1);
  psi.push_back(Eigen::MatrixXd::Identity(k, k));
  for (int h = 1; h <= horizon; ++h) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
    for (int i = 1; i <= std::min(h, p); ++i) {
      m += model.coef[static_cast<std::size_t>(i - 1)] * psi[static_cast<std::size_t>(h - i)];
    }
    psi.push_back(std::move(m));
  }
  return psi;
}

std::vector<Eigen::MatrixXd> impulse_response(const VarModel& model, int horizon) {
  const Eigen::MatrixXd L = cholesky_factor(model.sigma);
  const auto psi = ma_coefficients(model, horizon);
  std::vector<Eigen::MatrixXd> theta;
  theta.reserve(psi.size());
  theta.push_back(L);  // Psi_0 = I, so horizon 0 is the factor itself
  for (std::size_t h = 1; h < psi.size(); ++h) theta.push_back(psi[h] * L);
  return theta;
}

double quantile_type7(std::vector<double> values, double q) {
  if (values.empty()) throw Error("quantile: empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw Error("quantile: q outside [0, 1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= values.size()) return values.back();
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

namespace {

// Unbiased bounded draw from the raw 64-bit stream; fully specified, so
// results do not depend on the standard library's distribution internals.
std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % span);
}

std::mt19937_64 replication_rng(std::uint64_t seed, int replication) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(replication), 0x9e3779b9u};
  return std::mt19937_64(seq);
}

}  // namespace

IrfResult bootstrap_irf(const VarModel& model, const Eigen::MatrixXd& data, int horizon,
                        const BootstrapOptions& options) {
  if (options.reps < 1) throw Error("bootstrap: reps must be >= 1");
  if (!(options.level > 0.0 && options.level < 100.0)) {
    throw Error("bootstrap: level must lie in (0, 100)");
  }
  const int T = static_cast<int>(data.rows());
  const int k = model.dim();
  const int p = model.lag_order;
  const int n = T - p;
  if (n != model.n_obs || k != static_cast<int>(data.cols())) {
    throw Error("bootstrap: model was not fitted on this data");
  }

  IrfResult result;
  result.horizon = horizon;
  result.point = impulse_response(model, horizon);
  result.reps_requested = options.reps;
  result.level = options.level;
  result.seed = options.seed;

  const Eigen::MatrixXd centered =
      model.residuals.rowwise() - model.residuals.colwise().mean();

  const std::size_t cells =
      (static_cast<std::size_t>(horizon) + 1) * static_cast<std::size_t>(k) *
      static_cast<std::size_t>(k);
  std::vector<std::vector<double>> draws(static_cast<std::size_t>(options.reps));
  std::vector<char> ok(static_cast<std::size_t>(options.reps), 0);

  auto run_replication = [&](int rep) {
    auto rng = replication_rng(options.seed, rep);
    Eigen::MatrixXd pseudo(T, k);
    pseudo.topRows(p) = data.topRows(p);
    for (int t = p; t < T; ++t) {
      Eigen::VectorXd y = model.intercept;
      for (int l = 1; l <= p; ++l) {
        y += model.coef[static_cast<std::size_t>(l - 1)] * pseudo.row(t - l).transpose();
      }
      y += centered.row(static_cast<Eigen::Index>(draw_index(rng, static_cast<std::size_t>(n))))
               .transpose();
      pseudo.row(t) = y.transpose();
    }
    try {
      const VarModel refit = fit_var(pseudo, p);
      const auto theta = impulse_response(refit, horizon);
      auto& flat = draws[static_cast<std::size_t>(rep)];
      flat.reserve(cells);
      for (const auto& m : theta) {
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) flat.push_back(m(i, j));
        }
      }
      ok[static_cast<std::size_t>(rep)] = 1;
    } catch (const Error&) {
      // refit failed: replication discarded and counted below
    }
  };

  int threads = options.threads;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  threads = std::min(threads, options.reps);

  if (threads == 1) {
    for (int rep = 0; rep < options.reps; ++rep) run_replication(rep);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int rep = next.fetch_add(1); rep < options.reps; rep = next.fetch_add(1)) {
          run_replication(rep);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<const std::vector<double>*> kept;
  kept.reserve(static_cast<std::size_t>(options.reps));
  for (int rep = 0; rep < options.reps; ++rep) {
    if (ok[static_cast<std::size_t>(rep)]) kept.push_back(&draws[static_cast<std::size_t>(rep)]);
  }
  result.reps_used = static_cast<int>(kept.size());
  result.reps_discarded = options.reps - result.reps_used;
  if (result.reps_discarded * 10 > options.reps) {
    throw Error("bootstrap: " + std::to_string(result.reps_discarded) + " of " +
                std::to_string(options.reps) + " replications failed to refit");
  }

  const double q_lo = (100.0 - options.level) / 200.0;
  const double q_hi = (100.0 + options.level) / 200.0;
  result.lower.assign(static_cast<std::size_t>(horizon) + 1, Eigen::MatrixXd::Zero(k, k));
  result.upper.assign(static_cast<std::size_t>(horizon) + 1, Eigen::MatrixXd::Zero(k, k));
  std::vector<double> cell(kept.size());
  std::size_t flat_index = 0;
  for (int h = 0; h <= horizon; ++h) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        for (std::size_t r = 0; r < kept.size(); ++r) cell[r] = (*kept[r])[flat_index];
        result.lower[static_cast<std::size_t>(h)](i, j) = quantile_type7(cell, q_lo);
        result.upper[static_cast<std::size_t>(h)](i, j) = quantile_type7(cell, q_hi);
        ++flat_index;
      }
    }
  }
  if (options.keep_draws) {
    result.draws.reserve(kept.size());
    for (const auto* d : kept) result.draws.push_back(*d);
  }
  return result;
}

}  // namespace uix::econ
