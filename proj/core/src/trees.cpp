#include "sigrec/trees.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "sigrec/taylor_jet.hpp"

namespace sigrec {

namespace {

void check_word_length(const Word& w) {
  if (w.empty()) throw std::invalid_argument("tree operations require a non-empty word");
  if (static_cast<int>(w.size()) > kMaxTreeWordLength)
    throw std::invalid_argument("word length " + std::to_string(w.size()) +
                                " exceeds tree guard of " + std::to_string(kMaxTreeWordLength));
}

// Iterate all tuples in {1..N}^k; calls f with a DirectionTuple.
template <typename F>
void for_each_tuple(int N, int k, F&& f) {
  DirectionTuple t(static_cast<std::size_t>(k), 1);
  while (true) {
    f(t);
    int pos = k - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == N) {
      t[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++t[static_cast<std::size_t>(pos)];
  }
}

Eigen::VectorXd eval_vertex(const LabeledRecursiveTree& tree, int v, const VectorFieldModel& model,
                            const Eigen::VectorXd& x) {
  const auto kids = tree.children(v);
  const int letter = tree.labels[static_cast<std::size_t>(v - 1)];
  if (kids.empty()) return eval(model, letter, x);

  std::vector<Eigen::VectorXd> childvals;
  childvals.reserve(kids.size());
  for (int c : kids) childvals.push_back(eval_vertex(tree, c, model, x));

  const int k = static_cast<int>(kids.size());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(model.N);
  for_each_tuple(model.N, k, [&](const DirectionTuple& dirs) {
    double weight = 1.0;
    for (int l = 0; l < k; ++l)
      weight *= childvals[static_cast<std::size_t>(l)][dirs[static_cast<std::size_t>(l)] - 1];
    if (weight != 0.0) out += mixed_partial(model, letter, dirs, x) * weight;
  });
  return out;
}

}  // namespace

std::vector<int> LabeledRecursiveTree::children(int v) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < parents.size(); ++k)
    if (parents[k] == v) out.push_back(static_cast<int>(k) + 2);
  return out;
}

std::vector<int> RootedOpTree::children(int v) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < parents.size(); ++k)
    if (parents[k] == v) out.push_back(static_cast<int>(k) + 1);
  return out;
}

std::vector<LabeledRecursiveTree> enumerate_trees(const Word& w) {
  check_word_length(w);
  const int m = static_cast<int>(w.size());
  std::vector<LabeledRecursiveTree> out;
  std::vector<int> parents(static_cast<std::size_t>(m - 1), 1);
  while (true) {
    out.push_back(LabeledRecursiveTree{parents, w});
    int pos = m - 2;
    while (pos >= 0 && parents[static_cast<std::size_t>(pos)] == pos + 1) {
      parents[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++parents[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<RootedOpTree> enumerate_rooted_ops(const Word& w) {
  check_word_length(w);
  const int m = static_cast<int>(w.size());
  std::vector<RootedOpTree> out;
  std::vector<int> parents(static_cast<std::size_t>(m), 0);
  while (true) {
    out.push_back(RootedOpTree{parents, w});
    int pos = m - 1;
    while (pos >= 0 && parents[static_cast<std::size_t>(pos)] == pos) {
      parents[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++parents[static_cast<std::size_t>(pos)];
  }
  return out;
}

namespace {
std::string canon_vertex(const LabeledRecursiveTree& tree, int v) {
  std::vector<std::string> kids;
  for (int c : tree.children(v)) kids.push_back(canon_vertex(tree, c));
  std::sort(kids.begin(), kids.end());
  std::string out = "(" + std::to_string(tree.labels[static_cast<std::size_t>(v - 1)]);
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}
}  // namespace

std::string canonical_form(const LabeledRecursiveTree& tree) { return canon_vertex(tree, 1); }

namespace {
// Shared subtree extraction: vertices are identified by original index, the
// parent of vertex `orig` is parent_of(orig); descendants of v are relabeled
// 1..size in increasing original order (ancestors always precede descendants).
template <typename ParentOf, typename LabelOf>
LabeledRecursiveTree extract_subtree(int v, int max_vertex, ParentOf parent_of, LabelOf label_of) {
  std::vector<int> members;           // original indices, increasing
  std::map<int, int> new_index;       // original -> 1-based new index
  members.push_back(v);
  new_index[v] = 1;
  for (int u = v + 1; u <= max_vertex; ++u) {
    auto it = new_index.find(parent_of(u));
    if (it != new_index.end()) {
      members.push_back(u);
      new_index[u] = static_cast<int>(members.size());
    }
  }
  LabeledRecursiveTree sub;
  sub.labels.reserve(members.size());
  for (int u : members) sub.labels.push_back(label_of(u));
  for (std::size_t k = 1; k < members.size(); ++k)
    sub.parents.push_back(new_index.at(parent_of(members[k])));
  return sub;
}
}  // namespace

LabeledRecursiveTree subtree(const LabeledRecursiveTree& tree, int v) {
  return extract_subtree(
      v, tree.order(), [&](int u) { return tree.parents[static_cast<std::size_t>(u - 2)]; },
      [&](int u) { return tree.labels[static_cast<std::size_t>(u - 1)]; });
}

LabeledRecursiveTree subtree(const RootedOpTree& tree, int v) {
  if (v < 1) throw std::invalid_argument("subtree of rooted op must start below the root");
  return extract_subtree(
      v, tree.order(), [&](int u) { return tree.parents[static_cast<std::size_t>(u - 1)]; },
      [&](int u) { return tree.labels[static_cast<std::size_t>(u - 1)]; });
}

Eigen::VectorXd eval_tree_vf(const LabeledRecursiveTree& tree, const VectorFieldModel& model,
                             const Eigen::VectorXd& x) {
  check_word_length(tree.labels);
  return eval_vertex(tree, 1, model, x);
}

Eigen::VectorXd eval_tree_vf_fixed_directions(const LabeledRecursiveTree& tree,
                                              const DirectionTuple& dirs,
                                              const VectorFieldModel& model,
                                              const Eigen::VectorXd& x) {
  check_word_length(tree.labels);
  const int m = tree.order();
  if (static_cast<int>(dirs.size()) != m - 1)
    throw std::invalid_argument("fixed-direction tuple must have one entry per edge");
  for (int j : dirs)
    if (j < 1 || j > model.N) throw std::invalid_argument("edge direction out of range");

  // outgoing-edge directions per vertex, in edge order
  std::vector<DirectionTuple> outdirs(static_cast<std::size_t>(m) + 1);
  for (int e = 1; e <= m - 1; ++e)
    outdirs[static_cast<std::size_t>(tree.parents[static_cast<std::size_t>(e - 1)])].push_back(
        dirs[static_cast<std::size_t>(e - 1)]);

  Eigen::VectorXd out = mixed_partial(model, tree.labels[0], outdirs[1], x);
  for (int l = 2; l <= m; ++l) {
    const Eigen::VectorXd part =
        mixed_partial(model, tree.labels[static_cast<std::size_t>(l - 1)],
                      outdirs[static_cast<std::size_t>(l)], x);
    out *= part[dirs[static_cast<std::size_t>(l - 2)] - 1];
  }
  return out;
}

double apply_rooted_op(const RootedOpTree& op, const TestFunction& g, const VectorFieldModel& model,
                       const Eigen::VectorXd& x) {
  check_word_length(op.labels);
  const auto root_children = op.children(0);
  const int k = static_cast<int>(root_children.size());

  std::vector<Eigen::VectorXd> fields;
  fields.reserve(root_children.size());
  for (int c : root_children) fields.push_back(eval_tree_vf(subtree(op, c), model, x));

  double acc = 0.0;
  for_each_tuple(model.N, k, [&](const DirectionTuple& dirs) {
    double weight = 1.0;
    for (int l = 0; l < k; ++l)
      weight *= fields[static_cast<std::size_t>(l)][dirs[static_cast<std::size_t>(l)] - 1];
    if (weight != 0.0) acc += tf_mixed_partial(g, dirs, x) * weight;
  });
  return acc;
}

double apply_word_direct(const Word& w, const TestFunction& g, const VectorFieldModel& model,
                         const Eigen::VectorXd& x) {
  check_word_length(w);
  validate_word(w, model.d);
  const int m = static_cast<int>(w.size());
  const int N = model.N;
  auto space = std::make_shared<TaylorJetSpace>(N, m);

  auto jet_of = [&](auto&& partial) {
    TaylorJet jet(space);
    for (int idx = 0; idx < space->size(); ++idx) {
      const auto& beta = space->exponents(idx);
      DirectionTuple dirs;
      double beta_fact = 1.0;
      for (int v = 0; v < N; ++v) {
        for (int rep = 1; rep <= beta[static_cast<std::size_t>(v)]; ++rep) {
          dirs.push_back(v + 1);
          beta_fact *= static_cast<double>(rep);
        }
      }
      jet.coeff(idx) = partial(dirs) / beta_fact;
    }
    return jet;
  };

  std::map<int, std::vector<TaylorJet>> field_jets;  // letter -> per-component jets
  for (int letter : w) {
    if (field_jets.count(letter)) continue;
    std::vector<TaylorJet> comps;
    for (int p = 0; p < N; ++p)
      comps.push_back(jet_of([&](const DirectionTuple& dirs) {
        return mixed_partial(model, letter, dirs, x)[p];
      }));
    field_jets.emplace(letter, std::move(comps));
  }

  TaylorJet h = jet_of([&](const DirectionTuple& dirs) { return tf_mixed_partial(g, dirs, x); });
  for (int letter : w) {
    TaylorJet next(space);
    const auto& comps = field_jets.at(letter);
    for (int q = 0; q < N; ++q) next += h.derivative(q) * comps[static_cast<std::size_t>(q)];
    h = std::move(next);
  }
  return h.value();
}

double apply_word_via_trees(const Word& w, const TestFunction& g, const VectorFieldModel& model,
                            const Eigen::VectorXd& x) {
  double acc = 0.0;
  for (const auto& op : enumerate_rooted_ops(w)) acc += apply_rooted_op(op, g, model, x);
  return acc;
}

Eigen::VectorXd sum_tree_field(const Word& w, const VectorFieldModel& model,
                               const Eigen::VectorXd& x) {
  check_word_length(w);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(model.N);
  for (const auto& tree : enumerate_trees(w)) acc += eval_tree_vf(tree, model, x);
  return acc;
}

}  // namespace sigrec
