#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <variant>
#include <vector>

#include "sigrec/vector_fields.hpp"

namespace sigrec {

/// g(x) = x_j (1-based coordinate projection).
struct ProjectionFn {
  int j = 1;
};

/// g(x) = x^T Q x + b^T x + c.
struct QuadraticFn {
  Eigen::MatrixXd Q;
  Eigen::VectorXd b;
  double c = 0.0;
};

/// g(x) = scale * exp(a^T x).
struct ExpLinearFn {
  Eigen::VectorXd a;
  double scale = 1.0;
};

/// Closed dictionary of smooth test functions with exact mixed partials of
/// arbitrary order.
using TestFunction = std::variant<ProjectionFn, QuadraticFn, ExpLinearFn>;

double tf_value(const TestFunction& g, const Eigen::VectorXd& x);

/// d^{|dirs|} g / dx_{j_k}...dx_{j_1} at x, exact for every order.
double tf_mixed_partial(const TestFunction& g, const DirectionTuple& dirs,
                        const Eigen::VectorXd& x);

/// The N coordinate projections plus a seeded random quadratic and a seeded
/// exp-of-linear-form; the standard dictionary used by the cross checks.
std::vector<TestFunction> test_function_dictionary(int N, std::uint64_t seed);

}  // namespace sigrec
