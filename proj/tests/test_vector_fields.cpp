#include <doctest.h>

#include "helpers.hpp"
#include "sigrec/errors.hpp"
#include "sigrec/independence.hpp"
#include "sigrec/rng.hpp"
#include "sigrec/vector_fields.hpp"

using namespace sigrec;

namespace {

VectorFieldModel make_model(ModelKind kind, int d, int N, std::uint64_t seed) {
  return sample_model(kind, d, (kind == ModelKind::ScalarPolynomial) ? 1 : N, seed);
}

}  // namespace

TEST_CASE("closed-form, jet, and finite-difference partials agree") {
  for (int k = 0; k < 4; ++k) {
    const auto kind = static_cast<ModelKind>(k);
    const auto model = make_model(kind, 2, 3, 17 + static_cast<std::uint64_t>(k));
    const auto pts = sample_points(model.N, 3, 5, "vf-points");
    auto rng = rng_stream(9, "vf-dirs");
    std::uniform_int_distribution<int> dl(1, model.N);
    for (const auto& x : pts) {
      for (int order = 0; order <= 3; ++order) {
        DirectionTuple dirs;
        for (int i = 0; i < order; ++i) dirs.push_back(dl(rng));
        for (int letter = 1; letter <= model.d; ++letter) {
          const Eigen::VectorXd cf = mixed_partial(model, letter, dirs, x);
          const Eigen::VectorXd jet = mixed_partial_jet(model, letter, dirs, x);
          for (int c = 0; c < model.N; ++c) {
            CHECK(cf[c] == doctest::Approx(jet[c]).epsilon(1e-10));
            if (order > 0) {
              const double fd = testutil::fd_mixed_partial(
                  [&](const Eigen::VectorXd& y) { return eval(model, letter, y)[c]; }, x, dirs);
              CHECK(cf[c] ==
                    doctest::Approx(fd).epsilon(1e-7).scale(std::max(1.0, std::abs(cf[c]))));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("order zero reduces to plain evaluation") {
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 3);
  Eigen::VectorXd x(2);
  x << 0.3, -0.4;
  const Eigen::VectorXd a = eval(model, 1, x);
  const Eigen::VectorXd b = mixed_partial(model, 1, {}, x);
  CHECK((a - b).lpNorm<Eigen::Infinity>() == doctest::Approx(0.0));
}

TEST_CASE("linear model partials vanish beyond first order") {
  const auto model = sample_model(ModelKind::Linear, 2, 3, 12);
  Eigen::VectorXd x = Eigen::VectorXd::Constant(3, 0.2);
  CHECK(mixed_partial(model, 1, {1, 2}, x).lpNorm<Eigen::Infinity>() == 0.0);
  const auto& A = std::get<LinearModel>(model.family).A[0];
  const Eigen::VectorXd g = mixed_partial(model, 1, {2}, x);
  for (int c = 0; c < 3; ++c) CHECK(g[c] == doctest::Approx(A(c, 1)));
}

TEST_CASE("sample_model is deterministic and shape-checked") {
  const auto a = sample_model(ModelKind::NeuralDepth2Exp, 3, 2, 77);
  const auto b = sample_model(ModelKind::NeuralDepth2Exp, 3, 2, 77);
  const auto& fa = std::get<NeuralDepth2ExpModel>(a.family);
  const auto& fb = std::get<NeuralDepth2ExpModel>(b.family);
  REQUIRE(fa.A.size() == 3);
  CHECK(fa.A[1] == fb.A[1]);
  CHECK(fa.D[2] == fb.D[2]);
  CHECK_THROWS_AS(sample_model(ModelKind::ScalarPolynomial, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("overflowing evaluation raises numeric_overflow_error") {
  VectorFieldModel model;
  model.d = 1;
  model.N = 1;
  model.family = NeuralDepth2ExpModel{{Eigen::MatrixXd::Constant(1, 1, 1.0)},
                                      {Eigen::VectorXd::Constant(1, 1.0)}};
  Eigen::VectorXd x = Eigen::VectorXd::Constant(1, 1000.0);
  CHECK_THROWS_AS(eval(model, 1, x), numeric_overflow_error);
}

TEST_CASE("model kind strings round trip") {
  for (int k = 0; k < 4; ++k) {
    const auto kind = static_cast<ModelKind>(k);
    CHECK(model_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(model_kind_from_string("nope"), std::invalid_argument);
}
