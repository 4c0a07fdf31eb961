#pragma once

#include <string>

#include <json.hpp>

#include "bellrand/bell.hpp"
#include "bellrand/correlations.hpp"
#include "bellrand/qubit.hpp"

namespace bellrand {

// File formats. Schema violations (wrong format tag, wrong shape, non-numeric
// entries) throw ValidationError; JSON syntax errors propagate from the
// parser.
//
//   behavior-2222/v1: { "format": "behavior-2222/v1",
//                       "p": [[..4..],[..4..],[..4..],[..4..]] }
//     rows ordered (u,v) = (1,1),(1,2),(2,1),(2,2); entries (++, +-, -+, --).
//   bell-expr/v1:     { "format": "bell-expr/v1", "gA": [.,.], "gB": [.,.],
//                       "gC": [.,.,.,.], "name": "..." }
//   qubit-real/v1:    { "format": "qubit-real/v1", "theta": t,
//                       "a1": [x,y,z], "a2": [...], "b1": [...], "b2": [...] }

// Shape/format check only; entries may violate behavior invariants.
ProbTable table_from_json(const nlohmann::json& j);

// table_from_json plus the Behavior invariants at tolerance 1e-9.
Behavior behavior_from_json(const nlohmann::json& j);
nlohmann::ordered_json behavior_to_json(const Behavior& beh);

BellExpression expression_from_json(const nlohmann::json& j);
nlohmann::ordered_json expression_to_json(const BellExpression& expr);

QubitRealization realization_from_json(const nlohmann::json& j);
nlohmann::ordered_json realization_to_json(const QubitRealization& r);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace bellrand
