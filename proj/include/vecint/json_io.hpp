// JSON schemas for arrays and measures.
//
// VectorArray:
//   {"n": 4, "D": 2, "alphabet": ["0","1"], "scaling": [1.0, 4.0],
//    "vectors": {"1,0": [0,0], "1,1": [1,1], ...}}       (i is 1-based)
// or the shorthand {"kind": "kalai", "n": 16}.
//
// Measures are matrices: {"p": [[...row i...], ...]} with one row per
// coordinate.
#pragma once

#include "vecint/array.hpp"
#include "vecint/measures.hpp"

#include <json.hpp>

#include <string>

namespace vecint {

nlohmann::json array_to_json(const VectorArray& array);
VectorArray array_from_json(const nlohmann::json& node);

// File path or builtin spec "kalai:n".
VectorArray load_array(const std::string& spec);

nlohmann::json measure_to_json(const ProductMeasure& mu);
ProductMeasure measure_from_json(const nlohmann::json& node);

nlohmann::json pair_measure_to_json(const PairMeasure& mu);

IntVec parse_int_vector(const std::string& text);
Vec parse_real_vector(const std::string& text);

}  // namespace vecint
