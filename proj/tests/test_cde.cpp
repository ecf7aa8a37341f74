#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "sigrec/cde.hpp"
#include "sigrec/errors.hpp"
#include "sigrec/independence.hpp"

using namespace sigrec;

TEST_CASE("linear flow matches the matrix exponential") {
  const auto model = sample_model(ModelKind::Linear, 2, 3, 55);
  const auto& A = std::get<LinearModel>(model.family).A;
  const auto path = random_path(2, 4, 1.0, 19);

  Eigen::VectorXd y0(3);
  y0 << 0.4, -0.2, 0.9;
  SolverConfig cfg;
  cfg.abs_tol = 1e-12;
  const Eigen::VectorXd got = solve({model, path, y0, 1.0}, cfg);

  // On each linear segment dY = (sum_i A_i dX^i) Y dt in the reduced clock, so
  // the segment map is exp(A_1 dx^1 + A_2 dx^2).
  Eigen::VectorXd expect = y0;
  for (int s = 0; s < path.segments(); ++s) {
    const Eigen::VectorXd inc = path.increment(s);
    expect = testutil::expm(A[0] * inc[0] + A[1] * inc[1]) * expect;
  }
  CHECK((got - expect).lpNorm<Eigen::Infinity>() <
        1e-9 * std::max(1.0, expect.lpNorm<Eigen::Infinity>()));
}

TEST_CASE("stepping is fourth order") {
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 8);
  const auto path = random_path(2, 3, 1.0, 77);
  Eigen::VectorXd y0 = Eigen::VectorXd::Zero(2);

  SolverConfig ref;
  ref.abs_tol = 1e-14;
  const Eigen::VectorXd truth = solve({model, path, y0, 1.0}, ref);

  auto err_at = [&](int steps) {
    SolverConfig c;
    c.base_steps = steps;
    c.error_control = false;
    return (solve({model, path, y0, 1.0}, c) - truth).lpNorm<Eigen::Infinity>();
  };
  const double e1 = err_at(4), e2 = err_at(8);
  const double order = std::log2(e1 / e2);
  CHECK(order > 3.5);
  CHECK(order < 4.5);
}

TEST_CASE("r = 0 freezes the initial condition") {
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 8);
  const auto path = random_path(2, 3, 1.0, 78);
  Eigen::VectorXd y0(2);
  y0 << 0.1, 0.2;
  CHECK((solve({model, path, y0, 0.0}, {}) - y0).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("trajectory covers the whole time grid") {
  const auto model = sample_model(ModelKind::Linear, 2, 2, 3);
  const auto path = random_path(2, 2, 1.0, 9);
  Trajectory traj;
  SolverConfig cfg;
  cfg.base_steps = 4;
  cfg.error_control = false;
  solve({model, path, Eigen::VectorXd::Zero(2), 1.0}, cfg, &traj);
  REQUIRE(traj.times.size() == traj.states.size());
  CHECK(traj.times.front() == path.times.front());
  CHECK(traj.times.back() == doctest::Approx(path.times.back()));
  CHECK(traj.times.size() == 1 + 2 * 4);
}

TEST_CASE("taylor remainder shrinks at order K + 1") {
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 31);
  const auto dict = test_function_dictionary(2, 7);
  Eigen::VectorXd y0(2);
  y0 << 0.2, -0.3;
  SolverConfig cfg;
  cfg.abs_tol = 1e-14;

  for (int K = 2; K <= 3; ++K) {
    auto remainder = [&](double amp) {
      auto base = random_path(2, 3, 1.0, 101);
      for (auto& p : base.points) p *= amp;
      const auto S = path_signature(base, K);
      const double exact = tf_value(dict[2], solve({model, base, y0, 1.0}, cfg));
      return std::abs(exact - taylor_predict(model, dict[2], y0, S, K));
    };
    const double r1 = remainder(0.15), r2 = remainder(0.075);
    const double order = std::log2(r1 / r2);
    CHECK(order > K + 1 - 1.0);  // within factor 2 of 2^{K+1}
    CHECK(order < K + 1 + 1.0);
  }
}

TEST_CASE("r-scaling routes agree to round-off") {
  const auto model = sample_model(ModelKind::NeuralDepth2Exp, 2, 2, 12);
  const auto path = random_path(2, 3, 1.0, 5);
  const auto S = path_signature(path, 3);
  Eigen::VectorXd y(2);
  y << 0.1, -0.4;
  const auto dict = test_function_dictionary(2, 3);
  for (double r : {0.5, 1.0, 2.0})
    CHECK(r_scaling_taylor_check(model, dict[0], y, S, 3, r) < 1e-12);
}

TEST_CASE("dimension mismatches are rejected") {
  const auto model = sample_model(ModelKind::Linear, 2, 2, 1);
  const auto path = random_path(3, 2, 1.0, 1);
  CHECK_THROWS_AS(solve({model, path, Eigen::VectorXd::Zero(2), 1.0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(solve({model, random_path(2, 2, 1.0, 1), Eigen::VectorXd::Zero(3), 1.0}, {}),
                  std::invalid_argument);
}
