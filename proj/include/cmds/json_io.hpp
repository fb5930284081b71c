#pragma once

#include <json.hpp>

#include "cmds/construct.hpp"
#include "cmds/lovett.hpp"
#include "cmds/setsystem.hpp"

namespace cmds {

using nlohmann::json;

// {"n": 7, "k": 4, "sets": [[1,2,3], ...]}  1-based, canonicalized sorted
json set_system_to_json(const SetSystem& s);
SetSystem set_system_from_json(const json& j);

// {"n": 3, "k": 4, "vectors": [[3,0,0], ...]}
json vec_set_to_json(const VecSet& v);
VecSet vec_set_from_json(const json& j);

// prime fields serialize elements as integers, extensions as coordinate lists
json field_elem_to_json(const FieldCtx& ctx, const FieldElem& a);
FieldElem field_elem_from_json(const FieldCtx& ctx, const json& j);

// {"q": 7, "k": 4, "n": 7, "rows": [[...], ...]}
json matrix_to_json(const FieldMatrix& A);
FieldMatrix matrix_from_json(const json& j);

json load_json_file(const std::string& path);

} // namespace cmds
