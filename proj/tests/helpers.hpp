// Independent numerical oracles shared by the unit and acceptance tests.
// Everything here is deliberately implemented without reusing the library's
// own algorithms.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>

#include "sigrec/vector_fields.hpp"

namespace testutil {

using ScalarFn = std::function<double(const Eigen::VectorXd&)>;

// 5-point central first derivative along coordinate j (0-based), O(h^4).
inline double fd1(const ScalarFn& f, const Eigen::VectorXd& x, int j, double h) {
  auto at = [&](double t) {
    Eigen::VectorXd y = x;
    y[j] += t;
    return f(y);
  };
  return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
}

// Nested mixed partial d^{|dirs|} f / dx_{dirs}, directions 1-based.
inline double nested_fd(ScalarFn f, const Eigen::VectorXd& x, const sigrec::DirectionTuple& dirs,
                        double h) {
  for (int d : dirs) {
    const int j = d - 1;
    f = [g = std::move(f), j, h](const Eigen::VectorXd& y) { return fd1(g, y, j, h); };
  }
  return f(x);
}

// Two Richardson levels on top of the O(h^4) stencils: O(h^8) truncation.
inline double fd_mixed_partial(const ScalarFn& f, const Eigen::VectorXd& x,
                               const sigrec::DirectionTuple& dirs, double h0 = 0.06) {
  const double a = nested_fd(f, x, dirs, h0);
  const double b = nested_fd(f, x, dirs, h0 / 2);
  const double c = nested_fd(f, x, dirs, h0 / 4);
  const double ab = (16 * b - a) / 15;
  const double bc = (16 * c - b) / 15;
  return (64 * bc - ab) / 63;
}

// Matrix exponential by scaling-and-squaring over a plain Taylor series
// (oracle for the linear-model flow; no Pade, no library call).
inline Eigen::MatrixXd expm(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  int squarings = 0;
  double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.25) {
    norm /= 2;
    ++squarings;
  }
  const Eigen::MatrixXd B = A / std::pow(2.0, squarings);
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 24; ++k) {
    term = term * B / static_cast<double>(k);
    out += term;
  }
  for (int s = 0; s < squarings; ++s) out = out * out;
  return out;
}

}  // namespace testutil
