#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <variant>
#include <vector>

#include "sigrec/activation.hpp"
#include "sigrec/nilpotent_jet.hpp"

namespace sigrec {

/// Ordered list (j_1,...,j_k) of coordinate directions in {1..N}; repeats
/// allowed. Empty tuple means "no derivative".
using DirectionTuple = std::vector<int>;

/// V_i(x) = A_i x.
struct LinearModel {
  std::vector<Eigen::MatrixXd> A;
};

/// V_i(x) = sigma(A_i x + b_i), sigma applied entrywise.
struct NeuralDepth1Model {
  Activation sigma = Activation::Tanh;
  std::vector<Eigen::MatrixXd> A;
  std::vector<Eigen::VectorXd> b;
};

/// V_i(x) = exp(A_i exp(D_i x)) with D_i strictly diagonal (stored as the
/// diagonal vector) and sigma fixed to exp.
struct NeuralDepth2ExpModel {
  std::vector<Eigen::MatrixXd> A;
  std::vector<Eigen::VectorXd> D;
};

/// N = 1; per-letter univariate polynomial, coefficients ascending.
struct ScalarPolynomialModel {
  std::vector<Eigen::VectorXd> coeffs;
};

enum class ModelKind { Linear, NeuralDepth1, NeuralDepth2Exp, ScalarPolynomial };

std::string to_string(ModelKind k);
ModelKind model_kind_from_string(const std::string& s);

struct VectorFieldModel {
  int d = 0;
  int N = 0;
  std::uint64_t seed = 0;
  std::variant<LinearModel, NeuralDepth1Model, NeuralDepth2ExpModel, ScalarPolynomialModel> family;

  ModelKind kind() const { return static_cast<ModelKind>(family.index()); }
};

/// Value of V_i(x). Throws numeric_overflow_error when a component is not
/// finite (nested exponentials can overflow).
Eigen::VectorXd eval(const VectorFieldModel& model, int letter, const Eigen::VectorXd& x);

/// The mixed partial d^{|dirs|}/dx_{j_k}...dx_{j_1} V_i(x), all components.
/// Closed forms per family; |dirs| = 0 reduces to eval.
Eigen::VectorXd mixed_partial(const VectorFieldModel& model, int letter,
                              const DirectionTuple& dirs, const Eigen::VectorXd& x);

/// Same derivative computed through truncated jet (hyper-dual) arithmetic;
/// kept as an independent route for cross-checks.
Eigen::VectorXd mixed_partial_jet(const VectorFieldModel& model, int letter,
                                  const DirectionTuple& dirs, const Eigen::VectorXd& x);

/// Component `component` (0-based) of V_i evaluated on jet inputs.
NilpotentJet eval_component_jet(const VectorFieldModel& model, int letter, int component,
                                const std::vector<NilpotentJet>& x);

/// Deterministic standard-normal sampling; NeuralDepth2Exp entries are scaled
/// by 1/N to keep nested exponentials in floating range on [-1,1]^N.
/// `sigma` only applies to NeuralDepth1.
VectorFieldModel sample_model(ModelKind kind, int d, int N, std::uint64_t seed,
                              Activation sigma = Activation::Tanh);

}  // namespace sigrec
