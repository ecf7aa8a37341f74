#pragma once

#include <json.hpp>
#include <string>

#include "sigrec/independence.hpp"
#include "sigrec/reconstruction.hpp"
#include "sigrec/tensor.hpp"
#include "sigrec/trees.hpp"
#include "sigrec/vector_fields.hpp"

namespace sigrec {

using json = nlohmann::json;

// TruncatedTensor <-> { "d", "L", "levels": [[...], ...] } (level 0 included)
json to_json(const TruncatedTensor& t);
TruncatedTensor tensor_from_json(const json& j);

// PiecewiseLinearPath <-> { "times": [...], "points": [[...], ...] }
json to_json(const PiecewiseLinearPath& p);
PiecewiseLinearPath path_from_json(const json& j);

// VectorFieldModel <-> { "kind", "d", "N", "seed", "A", "D", "b", "coeffs",
// "sigma" }; matrices row-major, only the fields the family uses.
json to_json(const VectorFieldModel& m);
VectorFieldModel model_from_json(const json& j);

// trees: { "parents", "labels" }; rooted ops additionally { "root": 0 }
json to_json(const LabeledRecursiveTree& t);
json to_json(const RootedOpTree& t);
LabeledRecursiveTree tree_from_json(const json& j);

// { "shape": [rows, cols], "singular_values", "rank", "tol", "verdict" }
json to_json(const RankReport& r);

json to_json(const LevelResult& r);
json to_json(const ReconstructionReport& r);

}  // namespace sigrec
