#pragma once

#include "sset/category.hpp"
#include "sset/simplicial_map.hpp"
#include "sset/simplicial_set.hpp"

#include <json.hpp>

#include <string>

namespace sset {

using json = nlohmann::json;

// {"truncation_dim": D, "simplices": [[labels of dim 0], ...],
//  "face": {"n": {label: [d_0 label, ..., d_n label]}},
//  "degeneracy": {"n": {label: [s_0 label, ..., s_n label]}}}
json to_json(const SimplicialSet& x);
SSetPtr sset_from_json(const json& j);

// {"domain": sset, "codomain": sset, "components": [{label: label}, ...]}
json to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const json& j);

// {"objects": [...], "morphisms": [{"name", "src", "tgt"}], "compose": [[g, f, gf]]}
json to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const json& j);

// Two-space indentation and a trailing newline; stable across runs.
std::string dump(const json& j);

} // namespace sset
