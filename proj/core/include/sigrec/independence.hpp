#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sigrec/test_functions.hpp"
#include "sigrec/trees.hpp"

namespace sigrec {

/// One member of a family whose linear independence is being probed.
struct TreeFieldMember {
  LabeledRecursiveTree tree;
};
struct FixedDirectionMember {
  LabeledRecursiveTree tree;
  DirectionTuple dirs;
};
struct WordOperatorMember {  // V_w restricted to a fixed test function
  Word word;
  TestFunction g;
};
struct WordFieldMember {  // sum of tree-like fields over T_w
  Word word;
};

using FamilyMember =
    std::variant<TreeFieldMember, FixedDirectionMember, WordOperatorMember, WordFieldMember>;

using FieldFamily = std::vector<FamilyMember>;

enum class Verdict { Independent, Dependent, Inconclusive };
std::string to_string(Verdict v);

struct RankReport {
  std::vector<Eigen::VectorXd> points;
  int rows = 0;
  int cols = 0;
  std::vector<double> singular_values;  // descending
  int rank = 0;
  double tol = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// Rows are (point, component) pairs — a scalar member (word operator)
/// contributes one row per point, a vector member N rows per point.
/// Columns are family members. Overflowing points are resampled from the
/// caller-supplied list order (bounded retries happen at the caller).
Eigen::MatrixXd sample_matrix(const FieldFamily& family, const VectorFieldModel& model,
                              const std::vector<Eigen::VectorXd>& points, bool normalize = true);

/// rank = #{sigma_k > tol * sigma_1}; verdict Independent iff rank == cols.
RankReport numerical_rank(const Eigen::MatrixXd& matrix, double tol = 1e-8);

/// Max (normalized) residual of the cyclic-word dependency of level-3 word
/// operators on R^1 over the given points and the standard test dictionary.
struct DependencyResidual {
  double max_abs = 0.0;
  double max_term = 0.0;
  double normalized() const { return max_term > 0 ? max_abs / max_term : max_abs; }
};
DependencyResidual check_remark_3_7(const VectorFieldModel& model,
                                    const std::vector<Eigen::VectorXd>& points);

/// Compares the two depth-one ladder terms built from w = (w_1..w_m) and
/// w' = (w_1, w_{m-1}, ..., w_2, w_m) with edge directions (1..m-1) and
/// (m-2,...,1,m-1); reports |cosine| of their sampled vectorizations.
struct ProportionalityReport {
  Word word_a, word_b;
  DirectionTuple dirs_a, dirs_b;
  double cosine = 0.0;       // signed
  double abs_cosine = 0.0;
};
ProportionalityReport check_remark_3_9(const VectorFieldModel& model, int m,
                                       const std::vector<Eigen::VectorXd>& points,
                                       const Word& base_word = {});

struct CertificateConfig {
  int points_factor = 2;      // sample ceil(cols/N)*factor points
  int point_sets = 3;         // disjoint sets for stability
  std::vector<double> tols = {1e-6, 1e-8, 1e-10};
  double report_tol = 1e-8;
  std::uint64_t seed = 0;
  std::size_t budget = 20000;  // max columns x trees
};

struct CertificatePair {
  RankReport trees;       // family {V_tau : tau in T_w, w in W_m}, deduplicated
  RankReport words;       // family {sum_tree_field(w) : w in W_m}
  int tree_members = 0;   // members before deduplication
  int tree_distinct = 0;  // distinct unordered trees (columns of `trees`)
};

/// Rank certificates at level m for the tree-like family and the word
/// family. Trees that coincide as unordered labeled trees carry identical
/// vector fields and are collapsed to one column first. Verdicts are
/// downgraded to Inconclusive unless stable across point sets and
/// tolerances.
CertificatePair independence_certificate(const VectorFieldModel& model, int m,
                                         const CertificateConfig& config = {});

/// Points drawn uniformly from [-1,1]^N (the sampling domain that keeps
/// nested exponentials in range).
std::vector<Eigen::VectorXd> sample_points(int N, int count, std::uint64_t seed,
                                           const std::string& stream);

}  // namespace sigrec
