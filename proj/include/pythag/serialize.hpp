#pragma once

// JSON shapes used by the CLI. Integers and rationals are always strings so
// that arbitrary precision survives any JSON reader.
//
//   triple       {"a": "<decimal>", "b": "<decimal>", "c": "<decimal>"}
//   fraction     "m/n"
//   normal form  {"scalar": "p/q", "r": "m/n", "klein": "++" | "+-" | "-+" | "--"}
//   family line  {"j": n, "r": "m/n", "triple": {...}, "diff": "<decimal>", ...}

#include <json.hpp>

#include "pythag/group.hpp"
#include "pythag/quadratic.hpp"
#include "pythag/triples.hpp"

namespace pythag {

using json = nlohmann::json;

json to_json(const PythTriple& t);
json to_json(const RationalTriple& t);
json to_json(const ReducedFraction& r);
json to_json(const NormalForm& f);
json to_json(const QuadElem& u);
json to_json(const DiffFamilyEntry& e);
json to_json(const CMinus2aEntry& e);

/// Inverses of the above; malformed input throws Error(Parse).
PythTriple triple_from_json(const json& j);
RationalTriple rational_triple_from_json(const json& j);
ReducedFraction fraction_from_json(const json& j);
NormalForm normal_form_from_json(const json& j);

}  // namespace pythag
