#include "sigrec/vector_fields.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "sigrec/errors.hpp"
#include "sigrec/rng.hpp"

namespace sigrec {

namespace {

void check_letter(const VectorFieldModel& model, int letter) {
  if (letter < 1 || letter > model.d)
    throw std::invalid_argument("letter " + std::to_string(letter) + " outside {1.." +
                                std::to_string(model.d) + "}");
}

void check_dirs(const VectorFieldModel& model, const DirectionTuple& dirs) {
  if (static_cast<int>(dirs.size()) > kJetOrderCap)
    throw unsupported_order_error("derivative order " + std::to_string(dirs.size()) +
                                  " exceeds jet cap " + std::to_string(kJetOrderCap));
  for (int j : dirs)
    if (j < 1 || j > model.N)
      throw std::invalid_argument("direction " + std::to_string(j) + " outside {1.." +
                                  std::to_string(model.N) + "}");
}

void check_finite(const Eigen::VectorXd& v, const char* what) {
  for (int i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i]))
      throw numeric_overflow_error(std::string(what) + ": non-finite component", i);
}

// Stirling numbers of the second kind, S(m,l) for m,l <= kJetOrderCap.
double stirling2(int m, int l) {
  static const auto table = [] {
    std::array<std::array<double, kJetOrderCap + 1>, kJetOrderCap + 1> t{};
    t[0][0] = 1.0;
    for (int m = 1; m <= kJetOrderCap; ++m)
      for (int l = 1; l <= m; ++l) t[m][l] = t[m - 1][l - 1] + l * t[m - 1][l];
    return t;
  }();
  return table[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)];
}

// Multiplicity of each coordinate direction (1-based) in dirs.
std::vector<int> direction_counts(int N, const DirectionTuple& dirs) {
  std::vector<int> m(static_cast<std::size_t>(N), 0);
  for (int j : dirs) ++m[static_cast<std::size_t>(j - 1)];
  return m;
}

double poly_derivative(const Eigen::VectorXd& coeffs, int order, double x) {
  // order-th derivative of sum coeffs[n] x^n, by Horner on shifted coefficients.
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (order > deg) return 0.0;
  double acc = 0.0;
  for (int n = deg; n >= order; --n) {
    double c = coeffs[n];
    for (int q = 0; q < order; ++q) c *= static_cast<double>(n - q);
    acc = acc * x + c;
  }
  return acc;
}

}  // namespace

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Linear: return "linear";
    case ModelKind::NeuralDepth1: return "neural_depth1";
    case ModelKind::NeuralDepth2Exp: return "neural_depth2_exp";
    case ModelKind::ScalarPolynomial: return "scalar_polynomial";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "linear") return ModelKind::Linear;
  if (s == "neural_depth1") return ModelKind::NeuralDepth1;
  if (s == "neural_depth2_exp") return ModelKind::NeuralDepth2Exp;
  if (s == "scalar_polynomial") return ModelKind::ScalarPolynomial;
  throw std::invalid_argument("unknown model kind: " + s);
}

Eigen::VectorXd eval(const VectorFieldModel& model, int letter, const Eigen::VectorXd& x) {
  return mixed_partial(model, letter, {}, x);
}

Eigen::VectorXd mixed_partial(const VectorFieldModel& model, int letter,
                              const DirectionTuple& dirs, const Eigen::VectorXd& x) {
  check_letter(model, letter);
  check_dirs(model, dirs);
  if (x.size() != model.N) throw std::invalid_argument("mixed_partial: point dimension mismatch");
  const std::size_t i = static_cast<std::size_t>(letter - 1);
  const int k = static_cast<int>(dirs.size());
  Eigen::VectorXd out(model.N);

  switch (model.kind()) {
    case ModelKind::Linear: {
      const auto& A = std::get<LinearModel>(model.family).A[i];
      if (k == 0)
        out = A * x;
      else if (k == 1)
        out = A.col(dirs[0] - 1);
      else
        out.setZero();
      break;
    }
    case ModelKind::NeuralDepth1: {
      const auto& fam = std::get<NeuralDepth1Model>(model.family);
      const Eigen::VectorXd pre = fam.A[i] * x + fam.b[i];
      for (int p = 0; p < model.N; ++p) {
        auto der = activation_derivatives(fam.sigma, pre[p], k);
        double v = der[static_cast<std::size_t>(k)];
        for (int j : dirs) v *= fam.A[i](p, j - 1);
        out[p] = v;
      }
      break;
    }
    case ModelKind::NeuralDepth2Exp: {
      // Component p of V_i is exp(s_p) with s_p = sum_j alpha_pj e^{d_j x_j},
      // which factors over coordinates; per coordinate hit m times,
      // d^m e^{c e^{bx}} = e^{c e^{bx}} b^m sum_l S(m,l) (c e^{bx})^l.
      const auto& fam = std::get<NeuralDepth2ExpModel>(model.family);
      const auto& A = fam.A[i];
      const auto& dvec = fam.D[i];
      const auto counts = direction_counts(model.N, dirs);
      Eigen::VectorXd inner(model.N);
      for (int j = 0; j < model.N; ++j) inner[j] = std::exp(dvec[j] * x[j]);
      for (int p = 0; p < model.N; ++p) {
        double s = 0.0;
        for (int j = 0; j < model.N; ++j) s += A(p, j) * inner[j];
        double v = std::exp(s);
        for (int j = 0; j < model.N; ++j) {
          const int m = counts[static_cast<std::size_t>(j)];
          if (m == 0) continue;
          const double c = A(p, j) * inner[j];
          double sum = 0.0, cpow = 1.0;
          for (int l = 1; l <= m; ++l) {
            cpow *= c;
            sum += stirling2(m, l) * cpow;
          }
          v *= std::pow(dvec[j], m) * sum;
        }
        out[p] = v;
      }
      break;
    }
    case ModelKind::ScalarPolynomial: {
      const auto& fam = std::get<ScalarPolynomialModel>(model.family);
      out[0] = poly_derivative(fam.coeffs[i], k, x[0]);
      break;
    }
  }
  check_finite(out, "mixed_partial");
  return out;
}

NilpotentJet eval_component_jet(const VectorFieldModel& model, int letter, int component,
                                const std::vector<NilpotentJet>& x) {
  check_letter(model, letter);
  const std::size_t i = static_cast<std::size_t>(letter - 1);
  const int k = x.empty() ? 0 : x.front().directions();
  const int p = component;

  switch (model.kind()) {
    case ModelKind::Linear: {
      const auto& A = std::get<LinearModel>(model.family).A[i];
      NilpotentJet acc(k, 0.0);
      for (int q = 0; q < model.N; ++q) acc += x[static_cast<std::size_t>(q)] * A(p, q);
      return acc;
    }
    case ModelKind::NeuralDepth1: {
      const auto& fam = std::get<NeuralDepth1Model>(model.family);
      NilpotentJet acc(k, fam.b[i][p]);
      for (int q = 0; q < model.N; ++q) acc += x[static_cast<std::size_t>(q)] * fam.A[i](p, q);
      return acc.apply(fam.sigma);
    }
    case ModelKind::NeuralDepth2Exp: {
      const auto& fam = std::get<NeuralDepth2ExpModel>(model.family);
      NilpotentJet acc(k, 0.0);
      for (int q = 0; q < model.N; ++q) {
        NilpotentJet inner = (x[static_cast<std::size_t>(q)] * fam.D[i][q]).apply(Activation::Exp);
        acc += inner * fam.A[i](p, q);
      }
      return acc.apply(Activation::Exp);
    }
    case ModelKind::ScalarPolynomial: {
      const auto& coeffs = std::get<ScalarPolynomialModel>(model.family).coeffs[i];
      NilpotentJet acc(k, 0.0);
      for (int n = static_cast<int>(coeffs.size()) - 1; n >= 0; --n) {
        acc = acc * x[0];
        acc += NilpotentJet::constant(k, coeffs[n]);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable model kind");
}

Eigen::VectorXd mixed_partial_jet(const VectorFieldModel& model, int letter,
                                  const DirectionTuple& dirs, const Eigen::VectorXd& x) {
  check_letter(model, letter);
  check_dirs(model, dirs);
  if (x.size() != model.N) throw std::invalid_argument("mixed_partial_jet: dimension mismatch");
  const int k = static_cast<int>(dirs.size());
  std::vector<NilpotentJet> xjet;
  xjet.reserve(static_cast<std::size_t>(model.N));
  for (int q = 0; q < model.N; ++q) {
    std::vector<int> slots;
    for (int l = 0; l < k; ++l)
      if (dirs[static_cast<std::size_t>(l)] - 1 == q) slots.push_back(l);
    xjet.push_back(NilpotentJet::seed(k, x[q], slots));
  }
  Eigen::VectorXd out(model.N);
  for (int p = 0; p < model.N; ++p) out[p] = eval_component_jet(model, letter, p, xjet).top();
  check_finite(out, "mixed_partial_jet");
  return out;
}

VectorFieldModel sample_model(ModelKind kind, int d, int N, std::uint64_t seed, Activation sigma) {
  if (d < 1 || N < 1) throw std::invalid_argument("sample_model: d and N must be >= 1");
  if (kind == ModelKind::ScalarPolynomial && N != 1)
    throw std::invalid_argument("sample_model: scalar_polynomial requires N = 1");

  VectorFieldModel model;
  model.d = d;
  model.N = N;
  model.seed = seed;
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto matrix = [&](const std::string& name, int letter, double scale) {
    auto rng = rng_stream(seed, name + "/" + std::to_string(letter));
    Eigen::MatrixXd M(N, N);
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) M(r, c) = gauss(rng) * scale;
    return M;
  };
  auto vector = [&](const std::string& name, int letter, int len, double scale) {
    auto rng = rng_stream(seed, name + "/" + std::to_string(letter));
    Eigen::VectorXd v(len);
    for (int r = 0; r < len; ++r) v[r] = gauss(rng) * scale;
    return v;
  };

  switch (kind) {
    case ModelKind::Linear: {
      LinearModel fam;
      for (int i = 1; i <= d; ++i) fam.A.push_back(matrix("A", i, 1.0));
      model.family = std::move(fam);
      break;
    }
    case ModelKind::NeuralDepth1: {
      NeuralDepth1Model fam;
      fam.sigma = sigma;
      for (int i = 1; i <= d; ++i) {
        fam.A.push_back(matrix("A", i, 1.0));
        fam.b.push_back(vector("b", i, N, 1.0));
      }
      model.family = std::move(fam);
      break;
    }
    case ModelKind::NeuralDepth2Exp: {
      const double scale = 1.0 / static_cast<double>(N);
      NeuralDepth2ExpModel fam;
      for (int i = 1; i <= d; ++i) {
        fam.A.push_back(matrix("A", i, scale));
        fam.D.push_back(vector("D", i, N, scale));
      }
      model.family = std::move(fam);
      break;
    }
    case ModelKind::ScalarPolynomial: {
      ScalarPolynomialModel fam;
      for (int i = 1; i <= d; ++i) fam.coeffs.push_back(vector("poly", i, 4, 1.0));
      model.family = std::move(fam);
      break;
    }
  }
  return model;
}

}  // namespace sigrec
