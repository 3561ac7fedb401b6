#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hyper/group.hpp"
#include "hyper/multistructure.hpp"
#include "hyper/presentation.hpp"

namespace hyper {

using Json = nlohmann::ordered_json;

// Multistructure JSON:
//   {"elements":["e","a"],"table":[[["e"],["a"]],[["a"],["e","a"]]]}
// table[i][j] lists the names in x_i.x_j in carrier order.

Json to_json(const Multistructure& m);
/// Throws ParseError on unknown or duplicate names, ragged tables and
/// wrong JSON types.
Multistructure multistructure_from_json(const Json& j);

/// Compact, byte-deterministic text of to_json(m).
std::string print_multistructure(const Multistructure& m);
Multistructure parse_multistructure(std::string_view text);

// Group JSON: {"group":"table","elements":[...],"table":[[0,1],[1,0]]}

Json to_json(const GroupTable& g);
GroupTable group_from_json(const Json& j);
GroupTable parse_group(std::string_view text);

/// Names as a JSON array, in carrier order.
Json names_json(const Multistructure& m, ElementSet s);

// Trame DSL, one directive per line; '#' starts a comment:
//   elements: t0 t1 t2
//   compose: t0 t1 -> t2
//   classes: {t0 t1} {t2}

/// Throws ParseError with the offending line number.
Presentation parse_trame(std::string_view text);
/// Throws InvalidInput when a name contains whitespace, braces, commas
/// or '#'.
std::string print_trame(const Presentation& p);

/// Parses "{t0 t1} {t2}" (commas allowed as separators) into a relation
/// on the trame's elements. `line` is used in error messages.
EquivalenceRelation parse_classes(std::string_view text, const Trame& t, std::size_t line = 0);

}  // namespace hyper
