#include "sigrec/serialize.hpp"

#include <stdexcept>

namespace sigrec {

namespace {

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const int rows = static_cast<int>(j.size());
  if (rows == 0) return {};
  const int cols = static_cast<int>(j.at(0).size());
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("matrix_from_json: ragged rows");
    for (int c = 0; c < cols; ++c) m(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Eigen::VectorXd vector_from_json(const json& j) {
  Eigen::VectorXd v(static_cast<int>(j.size()));
  for (int i = 0; i < v.size(); ++i) v[i] = j.at(static_cast<std::size_t>(i)).get<double>();
  return v;
}

template <typename T, typename F>
json list_to_json(const std::vector<T>& xs, F&& f) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

std::vector<Eigen::MatrixXd> matrices_from_json(const json& j) {
  std::vector<Eigen::MatrixXd> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

std::vector<Eigen::VectorXd> vectors_from_json(const json& j) {
  std::vector<Eigen::VectorXd> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

}  // namespace

json to_json(const TruncatedTensor& t) {
  return json{{"d", t.d}, {"L", t.L}, {"levels", t.levels}};
}

TruncatedTensor tensor_from_json(const json& j) {
  TruncatedTensor t(j.at("d").get<int>(), j.at("L").get<int>());
  const auto& levels = j.at("levels");
  if (static_cast<int>(levels.size()) != t.L + 1)
    throw std::invalid_argument("tensor_from_json: level count mismatch");
  for (int n = 0; n <= t.L; ++n) {
    auto lvl = levels.at(static_cast<std::size_t>(n)).get<std::vector<double>>();
    if (lvl.size() != t.levels[static_cast<std::size_t>(n)].size())
      throw std::invalid_argument("tensor_from_json: level size mismatch");
    t.levels[static_cast<std::size_t>(n)] = std::move(lvl);
  }
  return t;
}

json to_json(const PiecewiseLinearPath& p) {
  return json{{"times", p.times}, {"points", list_to_json(p.points, vector_to_json)}};
}

PiecewiseLinearPath path_from_json(const json& j) {
  return PiecewiseLinearPath(j.at("times").get<std::vector<double>>(),
                             vectors_from_json(j.at("points")));
}

json to_json(const VectorFieldModel& m) {
  json j{{"kind", to_string(m.kind())}, {"d", m.d}, {"N", m.N}, {"seed", m.seed}};
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, LinearModel>) {
          j["A"] = list_to_json(fam.A, matrix_to_json);
        } else if constexpr (std::is_same_v<T, NeuralDepth1Model>) {
          j["sigma"] = to_string(fam.sigma);
          j["A"] = list_to_json(fam.A, matrix_to_json);
          j["b"] = list_to_json(fam.b, vector_to_json);
        } else if constexpr (std::is_same_v<T, NeuralDepth2ExpModel>) {
          j["A"] = list_to_json(fam.A, matrix_to_json);
          j["D"] = list_to_json(fam.D, vector_to_json);
        } else {
          static_assert(std::is_same_v<T, ScalarPolynomialModel>);
          j["coeffs"] = list_to_json(fam.coeffs, vector_to_json);
        }
      },
      m.family);
  return j;
}

VectorFieldModel model_from_json(const json& j) {
  VectorFieldModel m;
  m.d = j.at("d").get<int>();
  m.N = j.at("N").get<int>();
  m.seed = j.value("seed", std::uint64_t{0});
  switch (model_kind_from_string(j.at("kind").get<std::string>())) {
    case ModelKind::Linear:
      m.family = LinearModel{matrices_from_json(j.at("A"))};
      break;
    case ModelKind::NeuralDepth1:
      m.family = NeuralDepth1Model{activation_from_string(j.value("sigma", "tanh")),
                                   matrices_from_json(j.at("A")), vectors_from_json(j.at("b"))};
      break;
    case ModelKind::NeuralDepth2Exp:
      m.family = NeuralDepth2ExpModel{matrices_from_json(j.at("A")), vectors_from_json(j.at("D"))};
      break;
    case ModelKind::ScalarPolynomial:
      m.family = ScalarPolynomialModel{vectors_from_json(j.at("coeffs"))};
      break;
  }
  return m;
}

json to_json(const LabeledRecursiveTree& t) {
  return json{{"parents", t.parents}, {"labels", t.labels}};
}

json to_json(const RootedOpTree& t) {
  return json{{"parents", t.parents}, {"labels", t.labels}, {"root", 0}};
}

LabeledRecursiveTree tree_from_json(const json& j) {
  return LabeledRecursiveTree{j.at("parents").get<std::vector<int>>(),
                              j.at("labels").get<std::vector<int>>()};
}

json to_json(const RankReport& r) {
  return json{{"shape", {r.rows, r.cols}},
              {"singular_values", r.singular_values},
              {"rank", r.rank},
              {"tol", r.tol},
              {"verdict", to_string(r.verdict)}};
}

json to_json(const LevelResult& r) {
  json j{{"level", r.level},         {"singular", r.singular},
         {"rank", r.rank},           {"estimated", r.estimated},
         {"truth", r.truth},         {"max_abs_error", r.max_abs_error},
         {"max_rel_error", r.max_rel_error}, {"cond", r.system_cond}};
  return j;
}

json to_json(const ReconstructionReport& r) {
  return json{{"d", r.d},
              {"L", r.L},
              {"levels", list_to_json(r.levels, [](const LevelResult& l) { return to_json(l); })},
              {"any_singular", r.any_singular},
              {"max_abs_error", r.max_abs_error},
              {"max_rel_error", r.max_rel_error}};
}

}  // namespace sigrec
