// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/synthetic.hpp"
#include "uix/econ/var.hpp"
#include "uix/errors.hpp"

using namespace uix;
using namespace uix::econ;

namespace {

synth::VarProcess diagonal_var1(double a11, double a22) {
  synth::VarProcess p;
  Eigen::MatrixXd a(2, 2);
  a << a11, 0.0, 0.0, a22;
  p.coef = {a};
  p.intercept = Eigen::VectorXd::Zero(2);
  p.sigma = Eigen::MatrixXd::Identity(2, 2);
  return p;
}

double max_abs_coef_error(const VarModel& model, const Eigen::MatrixXd& truth) {
  return (model.coef[0] - truth).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("fit_var recovers a known VAR(1)") {
  const auto process = diagonal_var1(0.5, 0.3);
  std::mt19937_64 rng(2024);
  const auto data = synth::simulate_var(process, 500, 50, rng);
  const auto model = fit_var(data, 1);
  CHECK(max_abs_coef_error(model, process.coef[0]) < 0.05);
  CHECK(model.n_obs == 499);
  CHECK(model.lag_order == 1);
  CHECK(model.stable());
}

TEST_CASE("white noise estimates stay near zero") {
  synth::VarProcess process = diagonal_var1(0.0, 0.0);
  std::mt19937_64 rng(7);
  const auto data = synth::simulate_var(process, 500, 10, rng);
  const auto model = fit_var(data, 1);
  CHECK(model.coef[0].cwiseAbs().maxCoeff() < 0.15);
}

TEST_CASE("fit_var rejects constant columns and short samples") {
  Eigen::MatrixXd data = Eigen::MatrixXd::Random(50, 2);
  data.col(1).setConstant(3.0);
  CHECK_THROWS_WITH_AS(fit_var(data, 1), doctest::Contains("rank-deficient"), Error);

  Eigen::MatrixXd tiny = Eigen::MatrixXd::Random(4, 2);
  CHECK_THROWS_WITH_AS(fit_var(tiny, 1), doctest::Contains("sample too short"), Error);
  CHECK_THROWS_AS(fit_var(tiny, 0), Error);
}

TEST_CASE("residual columns have zero mean and sigma uses divisor T-p") {
  std::mt19937_64 rng(11);
  const auto process = synth::random_stable_var(3, 2, 0.7, rng);
  const auto data = synth::simulate_var(process, 300, 30, rng);
  const auto model = fit_var(data, 2);

  const Eigen::VectorXd means = model.residuals.colwise().mean();
  CHECK(means.cwiseAbs().maxCoeff() <= 1e-8);

  const Eigen::MatrixXd expected =
      (model.residuals.transpose() * model.residuals) / static_cast<double>(model.n_obs);
  CHECK((model.sigma - expected).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(model.n_obs == 298);
}

TEST_CASE("coefficients satisfy the normal equations") {
  std::mt19937_64 rng(13);
  const auto process = synth::random_stable_var(2, 2, 0.6, rng);
  const auto data = synth::simulate_var(process, 240, 20, rng);
  const int p = 2, k = 2;
  const auto model = fit_var(data, p);

  const int T = static_cast<int>(data.rows());
  const int n = T - p;
  const int m = k * p + 1;
  Eigen::MatrixXd Z(n, m), Y(n, k);
  for (int t = p; t < T; ++t) {
    Z(t - p, 0) = 1.0;
    for (int l = 1; l <= p; ++l) Z.block(t - p, 1 + (l - 1) * k, 1, k) = data.row(t - l);
    Y.row(t - p) = data.row(t);
  }
  Eigen::MatrixXd B(m, k);
  B.row(0) = model.intercept.transpose();
  for (int l = 0; l < p; ++l) {
    B.block(1 + l * k, 0, k, k) = model.coef[static_cast<std::size_t>(l)].transpose();
  }
  const double resid = ((Z.transpose() * Z) * B - Z.transpose() * Y).norm();
  CHECK(resid <= 1e-8 * (Z.transpose() * Y).norm());
}

TEST_CASE("estimation error shrinks with sample size") {
  const auto process = diagonal_var1(0.5, 0.3);
  std::vector<double> medians;
  for (const int T : {200, 800, 3200}) {
    std::vector<double> errors;
    for (std::uint64_t seed = 1; seed <= 21; ++seed) {
      std::mt19937_64 rng(seed * 7919);
      const auto data = synth::simulate_var(process, T, 50, rng);
      errors.push_back(max_abs_coef_error(fit_var(data, 1), process.coef[0]));
    }
    std::sort(errors.begin(), errors.end());
    medians.push_back(errors[errors.size() / 2]);
  }
  CHECK(medians[1] < medians[0]);
  CHECK(medians[2] < medians[1]);
}

TEST_CASE("AIC picks the true lag order on VAR(1) data") {
  // Reference simulation puts plain AIC's correct-selection rate at ~85%
  // for k=2, T=500, p_max=6 (AIC overselects by design); gate below that
  // rate minus sampling slack.
  const auto process = diagonal_var1(0.5, 0.3);
  int correct = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(trial));
    const auto data = synth::simulate_var(process, 500, 50, rng);
    if (select_lag(data, 6, Criterion::AIC) == 1) ++correct;
  }
  CHECK(correct >= 78);
}

TEST_CASE("select_lag edge cases") {
  const auto process = diagonal_var1(0.5, 0.3);
  std::mt19937_64 rng(17);
  const auto data = synth::simulate_var(process, 120, 10, rng);
  CHECK(select_lag(data, 1) == 1);  // only candidate

  Eigen::MatrixXd tiny = synth::simulate_var(process, 16, 4, rng);
  CHECK_THROWS_WITH_AS(select_lag(tiny, 6), doctest::Contains("infeasible"), Error);
  CHECK_THROWS_AS(select_lag(data, 0), Error);
}

TEST_CASE("criterion names round-trip") {
  CHECK(parse_criterion("aic") == Criterion::AIC);
  CHECK(parse_criterion("BIC") == Criterion::BIC);
  CHECK(parse_criterion("hq") == Criterion::HQ);
  CHECK_THROWS_AS(parse_criterion("cv"), Error);
  CHECK(std::string(criterion_name(Criterion::AIC)) == "aic");
}

TEST_CASE("BIC and HQ are selectable and behave on white noise") {
  synth::VarProcess process = diagonal_var1(0.0, 0.0);
  std::mt19937_64 rng(23);
  const auto data = synth::simulate_var(process, 400, 10, rng);
  CHECK(select_lag(data, 4, Criterion::BIC) == 1);
  CHECK(select_lag(data, 4, Criterion::HQ) == 1);
}
