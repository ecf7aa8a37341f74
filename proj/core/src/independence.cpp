#include "sigrec/independence.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <set>
#include <stdexcept>

#include "sigrec/errors.hpp"
#include "sigrec/rng.hpp"

namespace sigrec {

namespace {

// number of rows a member contributes per sample point
int member_arity(const FamilyMember& m, int N) {
  return std::holds_alternative<WordOperatorMember>(m) ? 1 : N;
}

Eigen::VectorXd eval_member(const FamilyMember& member, const VectorFieldModel& model,
                            const Eigen::VectorXd& x) {
  return std::visit(
      [&](const auto& mem) -> Eigen::VectorXd {
        using T = std::decay_t<decltype(mem)>;
        if constexpr (std::is_same_v<T, TreeFieldMember>) {
          return eval_tree_vf(mem.tree, model, x);
        } else if constexpr (std::is_same_v<T, FixedDirectionMember>) {
          return eval_tree_vf_fixed_directions(mem.tree, mem.dirs, model, x);
        } else if constexpr (std::is_same_v<T, WordFieldMember>) {
          return sum_tree_field(mem.word, model, x);
        } else {
          static_assert(std::is_same_v<T, WordOperatorMember>);
          Eigen::VectorXd v(1);
          v[0] = apply_word_direct(mem.word, mem.g, model, x);
          return v;
        }
      },
      member);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Independent: return "independent";
    case Verdict::Dependent: return "dependent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<Eigen::VectorXd> sample_points(int N, int count, std::uint64_t seed,
                                           const std::string& stream) {
  auto rng = rng_stream(seed, stream);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd x(N);
    for (int j = 0; j < N; ++j) x[j] = unif(rng);
    pts.push_back(std::move(x));
  }
  return pts;
}

Eigen::MatrixXd sample_matrix(const FieldFamily& family, const VectorFieldModel& model,
                              const std::vector<Eigen::VectorXd>& points, bool normalize) {
  if (family.empty()) throw std::invalid_argument("sample_matrix: empty family");
  if (points.empty()) throw std::invalid_argument("sample_matrix: no sample points");
  const int arity = member_arity(family.front(), model.N);
  for (const auto& m : family)
    if (member_arity(m, model.N) != arity)
      throw std::invalid_argument("sample_matrix: mixed scalar/vector family");

  const int cols = static_cast<int>(family.size());
  const int rows = static_cast<int>(points.size()) * arity;
  Eigen::MatrixXd M(rows, cols);

  constexpr int kMaxRetries = 8;
  for (std::size_t p = 0; p < points.size(); ++p) {
    Eigen::VectorXd x = points[p];
    int attempts = 0;
    while (true) {
      try {
        for (int c = 0; c < cols; ++c) {
          const Eigen::VectorXd v = eval_member(family[static_cast<std::size_t>(c)], model, x);
          M.block(static_cast<int>(p) * arity, c, arity, 1) = v;
        }
        break;
      } catch (const numeric_overflow_error&) {
        if (++attempts > kMaxRetries) throw;
        // deterministic replacement point for this row block
        x = sample_points(model.N, 1, model.seed + p,
                          "sample_matrix/retry/" + std::to_string(attempts))[0];
      }
    }
  }

  if (normalize) {
    for (int c = 0; c < cols; ++c) {
      const double norm = M.col(c).norm();
      if (norm > 0.0) M.col(c) /= norm;
    }
  }
  return M;
}

RankReport numerical_rank(const Eigen::MatrixXd& matrix, double tol) {
  if (!matrix.allFinite()) throw std::invalid_argument("numerical_rank: non-finite entries");
  RankReport report;
  report.rows = static_cast<int>(matrix.rows());
  report.cols = static_cast<int>(matrix.cols());
  report.tol = tol;

  Eigen::BDCSVD<Eigen::MatrixXd> svd(matrix);
  const auto& sv = svd.singularValues();
  report.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double sigma1 = report.singular_values.empty() ? 0.0 : report.singular_values.front();
  int rank = 0;
  for (double s : report.singular_values)
    if (s > tol * sigma1 && s > 0.0) ++rank;
  if (sigma1 == 0.0) rank = 0;
  report.rank = rank;
  report.verdict = (rank == report.cols) ? Verdict::Independent : Verdict::Dependent;
  return report;
}

DependencyResidual check_remark_3_7(const VectorFieldModel& model,
                                    const std::vector<Eigen::VectorXd>& points) {
  if (model.N != 1 || model.d != 3)
    throw std::invalid_argument("check_remark_3_7 requires N = 1, d = 3");
  const std::vector<Word> plus = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  const std::vector<Word> minus = {{1, 3, 2}, {2, 1, 3}, {3, 2, 1}};

  DependencyResidual res;
  const auto dict = test_function_dictionary(model.N, model.seed ^ 0x37);
  for (const auto& x : points) {
    for (const auto& g : dict) {
      double acc = 0.0;
      for (const auto& w : plus) {
        const double t = apply_word_direct(w, g, model, x);
        acc += t;
        res.max_term = std::max(res.max_term, std::abs(t));
      }
      for (const auto& w : minus) {
        const double t = apply_word_direct(w, g, model, x);
        acc -= t;
        res.max_term = std::max(res.max_term, std::abs(t));
      }
      res.max_abs = std::max(res.max_abs, std::abs(acc));
    }
  }
  return res;
}

ProportionalityReport check_remark_3_9(const VectorFieldModel& model, int m,
                                       const std::vector<Eigen::VectorXd>& points,
                                       const Word& base_word) {
  if (m < 3) throw std::invalid_argument("check_remark_3_9 requires m >= 3");
  if (m - 1 > model.N) throw std::invalid_argument("check_remark_3_9 requires m - 1 <= N");

  Word w = base_word;
  if (w.empty())
    for (int l = 0; l < m; ++l) w.push_back((l % model.d) + 1);
  if (static_cast<int>(w.size()) != m)
    throw std::invalid_argument("check_remark_3_9: base word length must be m");
  validate_word(w, model.d);

  // w' keeps the first and last letters and reverses the middle
  Word wp;
  wp.push_back(w[0]);
  for (int l = m - 2; l >= 1; --l) wp.push_back(w[static_cast<std::size_t>(l)]);
  wp.push_back(w[static_cast<std::size_t>(m - 1)]);

  std::vector<int> ladder(static_cast<std::size_t>(m - 1));
  for (int k = 1; k <= m - 1; ++k) ladder[static_cast<std::size_t>(k - 1)] = k;

  LabeledRecursiveTree tau{ladder, w};
  LabeledRecursiveTree taup{ladder, wp};

  DirectionTuple ja(static_cast<std::size_t>(m - 1));
  for (int k = 1; k <= m - 1; ++k) ja[static_cast<std::size_t>(k - 1)] = k;
  DirectionTuple jb;
  for (int k = m - 2; k >= 1; --k) jb.push_back(k);
  jb.push_back(m - 1);

  Eigen::VectorXd va(static_cast<int>(points.size()) * model.N);
  Eigen::VectorXd vb(static_cast<int>(points.size()) * model.N);
  for (std::size_t p = 0; p < points.size(); ++p) {
    va.segment(static_cast<int>(p) * model.N, model.N) =
        eval_tree_vf_fixed_directions(tau, ja, model, points[p]);
    vb.segment(static_cast<int>(p) * model.N, model.N) =
        eval_tree_vf_fixed_directions(taup, jb, model, points[p]);
  }

  ProportionalityReport report;
  report.word_a = w;
  report.word_b = wp;
  report.dirs_a = ja;
  report.dirs_b = jb;
  const double na = va.norm(), nb = vb.norm();
  report.cosine = (na > 0 && nb > 0) ? va.dot(vb) / (na * nb) : 0.0;
  report.abs_cosine = std::abs(report.cosine);
  return report;
}

CertificatePair independence_certificate(const VectorFieldModel& model, int m,
                                         const CertificateConfig& config) {
  const auto words = enumerate_words(model.d, m);
  std::size_t tree_cols = 0;
  int tree_members = 0;
  std::set<std::string> seen;
  FieldFamily tree_family;
  FieldFamily word_family;
  for (const auto& w : words) {
    for (auto& t : enumerate_trees(w)) {
      ++tree_members;
      if (!seen.insert(canonical_form(t)).second) continue;  // identical field
      tree_family.push_back(TreeFieldMember{std::move(t)});
      ++tree_cols;
    }
    word_family.push_back(WordFieldMember{w});
  }
  if (tree_cols > config.budget)
    throw std::invalid_argument("independence_certificate: " + std::to_string(tree_cols) +
                                " tree columns exceed budget " + std::to_string(config.budget));

  auto certify = [&](const FieldFamily& family) {
    const int cols = static_cast<int>(family.size());
    const int npoints =
        ((cols + model.N - 1) / model.N) * std::max(1, config.points_factor);
    RankReport primary;
    bool stable = true;
    int ref_rank = -1;
    for (int set = 0; set < config.point_sets; ++set) {
      auto pts = sample_points(model.N, npoints, config.seed,
                               "certificate/set" + std::to_string(set));
      const Eigen::MatrixXd M = sample_matrix(family, model, pts, /*normalize=*/true);
      for (double tol : config.tols) {
        const RankReport r = numerical_rank(M, tol);
        if (ref_rank < 0) ref_rank = r.rank;
        if (r.rank != ref_rank) stable = false;
      }
      if (set == 0) {
        primary = numerical_rank(M, config.report_tol);
        primary.points = pts;
      }
    }
    if (!stable) primary.verdict = Verdict::Inconclusive;
    return primary;
  };

  CertificatePair pair;
  pair.trees = certify(tree_family);
  pair.words = certify(word_family);
  pair.tree_members = tree_members;
  pair.tree_distinct = static_cast<int>(tree_cols);
  return pair;
}

}  // namespace sigrec
