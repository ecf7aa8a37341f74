#pragma once

#include <Eigen/Dense>
#include <optional>

#include "sigrec/tensor.hpp"
#include "sigrec/test_functions.hpp"
#include "sigrec/vector_fields.hpp"

namespace sigrec {

/// dY = sum_i r V_i(Y) dX^i with initial value y0.
struct CDEProblem {
  VectorFieldModel model;
  PiecewiseLinearPath path;
  Eigen::VectorXd y0;
  double r = 1.0;
};

struct SolverConfig {
  int base_steps = 32;       // RK4 steps per path segment
  bool error_control = true;
  double abs_tol = 1e-12;    // terminal-value agreement between refinements,
                             // measured relative to max(1, |state|)
  int max_halvings = 10;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
};

/// Terminal value Y_T. On each linear segment the CDE reduces to the
/// autonomous ODE dY/du = r sum_i V_i(Y) dX^i, integrated with classical
/// 4th-order stepping; with error control the step count doubles until two
/// successive terminal values agree within abs_tol.
Eigen::VectorXd solve(const CDEProblem& problem, const SolverConfig& cfg,
                      Trajectory* trajectory = nullptr);

/// Truncated Taylor prediction of g(Y_T):
/// g(y) + sum_{k<=K} sum_{|w|=k} V_w g(y) * S^w.
double taylor_predict(const VectorFieldModel& model, const TestFunction& g,
                      const Eigen::VectorXd& y, const TruncatedTensor& S, int K);

/// |scaled-field prediction - rescaled-coefficient prediction| for the
/// r-scaled Taylor sum; the two are evaluation orders of the same finite sum.
double r_scaling_taylor_check(const VectorFieldModel& model, const TestFunction& g,
                              const Eigen::VectorXd& y, const TruncatedTensor& S, int K, double r);

}  // namespace sigrec
