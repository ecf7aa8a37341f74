#include <doctest.h>

#include "sigrec/independence.hpp"

using namespace sigrec;

TEST_CASE("numerical rank of constructed matrices") {
  Eigen::MatrixXd M(4, 3);
  M << 1, 0, 1,  //
      0, 1, 1,   //
      1, 1, 2,   //
      2, 0, 2;   // column 3 = column 1 + column 2
  const auto r = numerical_rank(M, 1e-10);
  CHECK(r.rank == 2);
  CHECK(r.verdict == Verdict::Dependent);
  CHECK(r.singular_values.size() == 3);
  CHECK(r.singular_values[2] < 1e-12);

  Eigen::MatrixXd I = Eigen::MatrixXd::Identity(5, 4);
  CHECK(numerical_rank(I, 1e-10).verdict == Verdict::Independent);
}

TEST_CASE("cyclic level-3 dependency on the line") {
  const auto model = sample_model(ModelKind::ScalarPolynomial, 3, 1, 99);
  const auto pts = sample_points(1, 30, 4, "r37");
  const auto res = check_remark_3_7(model, pts);
  CHECK(res.max_term > 0);
  CHECK(res.normalized() < 1e-12);
}

TEST_CASE("ladder terms are proportional at order three") {
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 10);
  const auto pts = sample_points(2, 20, 6, "r39");
  const auto rep = check_remark_3_9(model, 3, pts);
  CHECK(rep.word_a == rep.word_b);  // middle reversal is trivial at m = 3
  CHECK(rep.abs_cosine >= 1 - 1e-12);
}

TEST_CASE("ladder proportionality requires compatible shapes") {
  const auto model = sample_model(ModelKind::NeuralDepth1, 2, 2, 10);
  const auto pts = sample_points(2, 5, 6, "r39b");
  CHECK_THROWS_AS(check_remark_3_9(model, 2, pts), std::invalid_argument);
  CHECK_THROWS_AS(check_remark_3_9(model, 4, pts), std::invalid_argument);  // m-1 > N
}

TEST_CASE("nested-exponential certificate at the N = m - 1 frontier") {
  const auto model = sample_model(ModelKind::NeuralDepth2Exp, 2, 2, 123);
  CertificateConfig cc;
  cc.seed = 5;
  const auto pair = independence_certificate(model, 3, cc);
  CHECK(pair.tree_members == 16);  // 8 words x 2 trees
  // the star tree's field is symmetric in its children, so words (a,b,c)
  // and (a,c,b) contribute the same column: two coincidences at d = 2
  CHECK(pair.tree_distinct == 14);
  CHECK(pair.trees.cols == 14);
  CHECK(pair.words.cols == 8);
  CHECK(pair.trees.verdict == Verdict::Independent);
  CHECK(pair.words.verdict == Verdict::Independent);
}

TEST_CASE("scalar cubic word family is dependent at level three") {
  const auto model = sample_model(ModelKind::ScalarPolynomial, 3, 1, 2);
  CertificateConfig cc;
  cc.seed = 13;
  const auto pair = independence_certificate(model, 3, cc);
  CHECK(pair.words.cols == 27);
  CHECK(pair.words.rank <= 26);
  CHECK(pair.words.verdict != Verdict::Independent);
}

TEST_CASE("budget guard refuses oversized tree families") {
  const auto model = sample_model(ModelKind::Linear, 3, 2, 1);
  CertificateConfig cc;
  cc.budget = 10;
  CHECK_THROWS_AS(independence_certificate(model, 4, cc), std::invalid_argument);
}

TEST_CASE("sample_matrix rejects mixed arity families") {
  const auto model = sample_model(ModelKind::Linear, 2, 2, 1);
  FieldFamily fam;
  fam.push_back(WordFieldMember{{1}});
  fam.push_back(WordOperatorMember{{1}, ProjectionFn{1}});
  const auto pts = sample_points(2, 3, 1, "mix");
  CHECK_THROWS_AS(sample_matrix(fam, model, pts), std::invalid_argument);
}
