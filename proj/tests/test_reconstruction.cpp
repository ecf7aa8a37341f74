#include <doctest.h>

#include <cmath>

#include "sigrec/reconstruction.hpp"

using namespace sigrec;

TEST_CASE("r_derivative_at_zero is exact on polynomials") {
  auto f = [](double r) { return 2.0 - r + 3 * r * r - 0.5 * r * r * r; };
  CHECK(r_derivative_at_zero(f, 0, 0.1, 5) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r_derivative_at_zero(f, 1, 0.1, 5) == doctest::Approx(-1.0).epsilon(1e-11));
  CHECK(r_derivative_at_zero(f, 2, 0.1, 5) == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(r_derivative_at_zero(f, 3, 0.1, 5) == doctest::Approx(-3.0).epsilon(1e-9));
}

TEST_CASE("r_derivative_at_zero converges on analytic functions") {
  auto f = [](double r) { return std::exp(2 * r); };
  CHECK(r_derivative_at_zero(f, 3, 0.05, 9) == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("r_derivative_at_zero validates its arguments") {
  auto f = [](double r) { return r; };
  CHECK_THROWS_AS(r_derivative_at_zero(f, 4, 0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(r_derivative_at_zero(f, 1, -0.1, 3), std::invalid_argument);
}

TEST_CASE("linear-model reconstruction recovers two levels") {
  const auto model = sample_model(ModelKind::Linear, 2, 2, 71);
  const auto path = random_path(2, 4, 1.0, 72);
  ReconstructionConfig cfg;
  cfg.L = 2;
  cfg.seed = 73;
  const auto rep = reconstruct(model, path, cfg);
  REQUIRE(rep.levels.size() == 2);
  CHECK(!rep.any_singular);
  CHECK(rep.max_abs_error < 1e-7);
}

TEST_CASE("determinism: identical configs give identical reports") {
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 5);
  const auto path = random_path(2, 3, 1.0, 6);
  ReconstructionConfig cfg;
  cfg.L = 2;
  cfg.seed = 7;
  const auto a = reconstruct(model, path, cfg);
  const auto b = reconstruct(model, path, cfg);
  REQUIRE(a.levels.size() == b.levels.size());
  for (std::size_t m = 0; m < a.levels.size(); ++m)
    CHECK(a.levels[m].estimated == b.levels[m].estimated);  // bit-identical
}

TEST_CASE("dimension mismatch is rejected") {
  const auto model = sample_model(ModelKind::Linear, 2, 2, 1);
  CHECK_THROWS_AS(reconstruct(model, random_path(3, 3, 1.0, 2), {}), std::invalid_argument);
}
