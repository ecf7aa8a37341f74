#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sigrec/independence.hpp"
#include "sigrec/rng.hpp"
#include "sigrec/trees.hpp"

using namespace sigrec;

namespace {

// Brute-force enumeration by explicit recursive attachment: vertex k+1 may
// attach to any existing vertex.
void attach_brute(std::vector<int>& parents, int m, std::set<std::vector<int>>& out) {
  if (static_cast<int>(parents.size()) == m - 1) {
    out.insert(parents);
    return;
  }
  const int next = static_cast<int>(parents.size()) + 2;  // vertex being added
  for (int p = 1; p < next; ++p) {
    parents.push_back(p);
    attach_brute(parents, m, out);
    parents.pop_back();
  }
}

}  // namespace

TEST_CASE("tree enumeration matches brute-force attachment") {
  for (int m = 1; m <= 6; ++m) {
    Word w(m, 1);
    const auto trees = enumerate_trees(w);
    std::size_t fact = 1;
    for (int k = 2; k <= m - 1; ++k) fact *= k;
    CHECK(trees.size() == fact);  // (m-1)!

    std::set<std::vector<int>> brute;
    std::vector<int> parents;
    attach_brute(parents, m, brute);
    std::set<std::vector<int>> ours;
    for (const auto& t : trees) ours.insert(t.parents);
    CHECK(ours == brute);

    std::size_t mfact = fact * static_cast<std::size_t>(m);
    CHECK(enumerate_rooted_ops(w).size() == mfact);  // m!
  }
}

TEST_CASE("subtree extraction relabels in increasing order") {
  // tree 1 <- 2, 1 <- 3, 3 <- 4 with labels (1,2,3,4); subtree at 3 is {3,4}
  LabeledRecursiveTree t{{1, 1, 3}, {1, 2, 3, 4}};
  const auto s = subtree(t, 3);
  CHECK(s.labels == Word{3, 4});
  CHECK(s.parents == std::vector<int>{1});
  const auto whole = subtree(t, 1);
  CHECK(whole.parents == t.parents);
}

TEST_CASE("word guard rejects oversized words") {
  Word big(kMaxTreeWordLength + 1, 1);
  CHECK_THROWS_AS(enumerate_trees(big), std::invalid_argument);
}

TEST_CASE("fixed-direction summands add up to the tree field") {
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 21);
  const Word w{1, 2, 1};
  Eigen::VectorXd x(2);
  x << 0.3, -0.2;
  for (const auto& tree : enumerate_trees(w)) {
    const Eigen::VectorXd direct = eval_tree_vf(tree, model, x);
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(2);
    for (int j1 = 1; j1 <= 2; ++j1)
      for (int j2 = 1; j2 <= 2; ++j2)
        acc += eval_tree_vf_fixed_directions(tree, {j1, j2}, model, x);
    CHECK((direct - acc).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("single-letter operators are plain directional derivatives") {
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 4);
  const auto dict = test_function_dictionary(2, 11);
  Eigen::VectorXd x(2);
  x << -0.4, 0.8;
  for (const auto& g : dict) {
    const Eigen::VectorXd v = eval(model, 2, x);
    double expect = 0;
    for (int j = 1; j <= 2; ++j) expect += tf_mixed_partial(g, {j}, x) * v[j - 1];
    CHECK(apply_word_direct({2}, g, model, x) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("jet route and tree expansion of word operators agree") {
  auto rng = rng_stream(2024, "word-draws");
  std::uniform_real_distribution<double> unif(-0.8, 0.8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto kind = static_cast<ModelKind>(trial % 4);
    const int N = (kind == ModelKind::ScalarPolynomial) ? 1 : 2 + trial % 2;
    const int d = 2 + trial % 2;
    const auto model = sample_model(kind, d, N, 300 + static_cast<std::uint64_t>(trial));
    const auto dict = test_function_dictionary(N, 41);
    std::uniform_int_distribution<int> letter(1, d);
    Word w(1 + trial % 4);
    for (auto& l : w) l = letter(rng);
    Eigen::VectorXd x(N);
    for (int i = 0; i < N; ++i) x[i] = unif(rng);

    const auto& g = dict[trial % dict.size()];
    const double a = apply_word_direct(w, g, model, x);
    const double b = apply_word_via_trees(w, g, model, x);
    CHECK(a == doctest::Approx(b).epsilon(1e-10).scale(std::max(1.0, std::abs(a))));
  }
}

TEST_CASE("word composition order: appended letters act outermost") {
  // V_{w i} g = V_i (V_w g), checked against a nested finite difference of
  // the inner operator.
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 63);
  const Word w{1, 2};
  const TestFunction g = ExpLinearFn{Eigen::Vector2d(0.3, -0.4), 1.0};
  Eigen::VectorXd x(2);
  x << 0.25, -0.15;

  const double composed = apply_word_direct({1, 2, 1}, g, model, x);
  auto inner = [&](const Eigen::VectorXd& y) { return apply_word_direct(w, g, model, y); };
  const Eigen::VectorXd v1 = eval(model, 1, x);
  double expect = 0;
  for (int j = 0; j < 2; ++j)
    expect += testutil::fd_mixed_partial(inner, x, {j + 1}) * v1[j];
  CHECK(composed == doctest::Approx(expect).epsilon(1e-7));
}

TEST_CASE("sum_tree_field components are word operators on projections") {
  const auto model = sample_model(ModelKind::NeuralDepth2Exp, 2, 2, 9);
  const Word w{2, 1, 2};
  Eigen::VectorXd x(2);
  x << 0.3, 0.1;
  const Eigen::VectorXd s = sum_tree_field(w, model, x);
  for (int c = 1; c <= 2; ++c) {
    const double direct = apply_word_direct(w, ProjectionFn{c}, model, x);
    CHECK(s[c - 1] == doctest::Approx(direct).epsilon(1e-11));
  }
}
