#pragma once

#include <string>

#include "json.hpp"
#include "kjdt/dcomplete.hpp"
#include "kjdt/kring.hpp"
#include "kjdt/rectify.hpp"

namespace kjdt {

using Json = nlohmann::ordered_json;

// {"name": str, "elements": [str...], "covers": [[lower, upper]...]}
// Input covers may be any order relations; construction normalizes them.
PosetPtr poset_from_json(const Json& j);
Json poset_to_json(const Poset& p);

Json ideal_to_json(const Poset& p, const Bits& ideal);
Bits ideal_from_json(const Poset& p, const Json& j);

// {"nu": [...], "lambda": [...]}
SkewShape shape_from_json(const Poset& p, const Json& j);
Json shape_to_json(const Poset& p, const SkewShape& s);

// {"nu": [...], "lambda": [...], "labels": {element: int}}
Tableau tableau_from_json(PosetPtr p, const Json& j);
Json tableau_to_json(const Tableau& t);

Json dcomplete_report_to_json(const Poset& p, const DReport& report);
Json urt_result_to_json(const UrtResult& result);
Json pchain_result_to_json(const PchainResult& result);

// {"poset": ..., "entries": [{"lambda", "mu", "nu", "t"}...]} sorted
// canonically
Json table_to_json(const StructureConstantTable& table);

// One node per element, one edge per cover (lower -> upper), elements rank
// grouped by longest-chain height. Byte-deterministic for a given poset.
std::string to_dot(const Poset& p);

}  // namespace kjdt
