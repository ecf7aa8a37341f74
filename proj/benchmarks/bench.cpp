#include <benchmark/benchmark.h>

#include "sigrec/cde.hpp"
#include "sigrec/independence.hpp"
#include "sigrec/reconstruction.hpp"
#include "sigrec/trees.hpp"

using namespace sigrec;

static void BM_PathSignature(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int L = static_cast<int>(state.range(1));
  const auto path = random_path(d, 20, 1.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(path_signature(path, L));
}
BENCHMARK(BM_PathSignature)->Args({2, 4})->Args({3, 4})->Args({3, 6});

static void BM_SumTreeField(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto model = sample_model(ModelKind::NeuralDepth2Exp, 2, 2, 3);
  Word w;
  for (int i = 0; i < m; ++i) w.push_back(1 + i % 2);
  Eigen::VectorXd x(2);
  x << 0.3, -0.2;
  for (auto _ : state) benchmark::DoNotOptimize(sum_tree_field(w, model, x));
}
BENCHMARK(BM_SumTreeField)->Arg(3)->Arg(4)->Arg(5);

static void BM_ApplyWordDirect(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 3, 4);
  const auto dict = test_function_dictionary(3, 5);
  Word w;
  for (int i = 0; i < m; ++i) w.push_back(1 + i % 2);
  Eigen::VectorXd x = Eigen::VectorXd::Constant(3, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_word_direct(w, dict[1], model, x));
}
BENCHMARK(BM_ApplyWordDirect)->Arg(3)->Arg(4)->Arg(5);

static void BM_Solve(benchmark::State& state) {
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 42);
  const auto path = random_path(2, 5, 1.0, 42);
  Eigen::VectorXd y0 = Eigen::VectorXd::Zero(2);
  SolverConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(solve({model, path, y0, 1.0}, cfg));
}
BENCHMARK(BM_Solve);

static void BM_Reconstruct(benchmark::State& state) {
  const auto model = sample_model(ModelKind::NeuralDepth2Exp, 2, 2, 42);
  const auto path = random_path(2, 5, 1.0, 42);
  ReconstructionConfig cfg;
  cfg.L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(model, path, cfg));
}
BENCHMARK(BM_Reconstruct)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
