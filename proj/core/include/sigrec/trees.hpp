#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "sigrec/test_functions.hpp"
#include "sigrec/vector_fields.hpp"
#include "sigrec/words.hpp"

namespace sigrec {

/// Operations on words longer than this refuse to run (the tree spaces grow
/// factorially).
inline constexpr int kMaxTreeWordLength = 8;

/// Letter-labeled recursive tree on vertices {1..m}: vertex k+1 attaches to
/// parents[k-1] in {1..k}, labels[l-1] is the letter of vertex l. The parent
/// vector is branch-order-free, so trees are non-planar by construction.
struct LabeledRecursiveTree {
  std::vector<int> parents;  // size m-1, parents[k-1] in {1..k}
  Word labels;               // size m

  int order() const { return static_cast<int>(labels.size()); }
  /// 1-based children of vertex v, in attachment order.
  std::vector<int> children(int v) const;
};

/// Recursive tree on vertices {0,1,..,m} with root 0 carrying label 0:
/// vertex k attaches to parents[k-1] in {0..k-1}.
struct RootedOpTree {
  std::vector<int> parents;  // size m, parents[k-1] in {0..k-1}
  Word labels;               // size m, labels of vertices 1..m

  int order() const { return static_cast<int>(labels.size()); }
  std::vector<int> children(int v) const;  // v in {0..m}
};

/// All (m-1)! trees of T_w, ordered lexicographically by parent vector.
std::vector<LabeledRecursiveTree> enumerate_trees(const Word& w);

/// All m! rooted operator trees of T_w^0, ordered lexicographically by
/// parent vector.
std::vector<RootedOpTree> enumerate_rooted_ops(const Word& w);

/// Canonical encoding of the underlying unordered labeled rooted tree.
/// Trees enumerated from different words can coincide as unordered trees
/// (sibling subtrees commute), and then their vector fields are identical.
std::string canonical_form(const LabeledRecursiveTree& tree);

/// The subtree of `tree` rooted at vertex v (1-based), re-encoded as a
/// recursive tree by relabeling descendants in increasing vertex order.
LabeledRecursiveTree subtree(const LabeledRecursiveTree& tree, int v);
LabeledRecursiveTree subtree(const RootedOpTree& tree, int v);

/// The tree-like vector field V_tau(x): recursive multilinear-derivative
/// evaluation; a leaf evaluates to V_i(x).
Eigen::VectorXd eval_tree_vf(const LabeledRecursiveTree& tree, const VectorFieldModel& model,
                             const Eigen::VectorXd& x);

/// The single edge-direction summand V_tau^j, where the k'th edge added in
/// the recursive construction carries direction dirs[k-1].
Eigen::VectorXd eval_tree_vf_fixed_directions(const LabeledRecursiveTree& tree,
                                              const DirectionTuple& dirs,
                                              const VectorFieldModel& model,
                                              const Eigen::VectorXd& x);

/// The tree-like operator V_{tau^0} applied to g at x.
double apply_rooted_op(const RootedOpTree& op, const TestFunction& g,
                       const VectorFieldModel& model, const Eigen::VectorXd& x);

/// The iterated operator V_w g(x) by nested derivations in truncated Taylor
/// (jet) arithmetic; independent of the tree expansion.
double apply_word_direct(const Word& w, const TestFunction& g, const VectorFieldModel& model,
                         const Eigen::VectorXd& x);

/// V_w g(x) as the sum of tree-like operators over T_w^0.
double apply_word_via_trees(const Word& w, const TestFunction& g, const VectorFieldModel& model,
                            const Eigen::VectorXd& x);

/// Sum over T_w of the tree-like vector fields; its j'th component equals
/// V_w applied to the j'th coordinate projection.
Eigen::VectorXd sum_tree_field(const Word& w, const VectorFieldModel& model,
                               const Eigen::VectorXd& x);

}  // namespace sigrec
