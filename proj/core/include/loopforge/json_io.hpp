#pragma once

#include "loopforge/brackets.hpp"
#include "loopforge/cayley_loop.hpp"
#include "loopforge/series.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace loopforge {

using nlohmann::json;

// Series <-> {"order": N, "const": "p/q",
//             "terms": [{"coef": "p/q", "mono": [[1,2],3]}, ...]}
// where a monomial is a nested array with generator ids at the leaves.
json series_to_json(const Series& s);
Series series_from_json(const json& j);

json monomial_to_json(Monomial m);
Monomial monomial_from_json(const json& j);

// BracketExpr <-> {"op": "comm"|"assoc"|"dev", "base": ..., "indices": [...],
//                  "args": [...]} with slots as {"slot": k}.
json bracket_to_json(const BracketExpr& expr);
BracketExpr bracket_from_json(const json& j);

// CayleyLoop <-> {"n": ..., "table": [[...], ...]}.
json loop_to_json(const CayleyLoop& loop);
CayleyLoop loop_from_json(const json& j);

// Loads either the JSON form or the plain text table format, deciding by the
// first non-space character.
CayleyLoop loop_from_text(const std::string& text);

}  // namespace loopforge
