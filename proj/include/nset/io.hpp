#pragma once

#include "nset/box_set.hpp"
#include "nset/construct.hpp"
#include "nset/diffset.hpp"
#include "nset/interval_set.hpp"
#include "nset/lattice_set.hpp"
#include "nset/weights.hpp"

#include <json.hpp>

#include <string>

namespace nset {

using Json = nlohmann::json;

// Documents carry every rational as a string "p/q" (q > 0, lowest terms) or
// "n" for integers, never as a binary float. Parsers also accept plain JSON
// integers. Unknown keys are rejected; violations throw
// Error(SchemaViolation).

Json interval_set_to_json(const IntervalSet& k);
IntervalSet interval_set_from_json(const Json& doc);  // canonicalizes

Json integer_set_to_json(const PositiveIntegerSet& a);
PositiveIntegerSet integer_set_from_json(const Json& doc);

Json box_set_to_json(const BoxSet& k);
BoxSet box_set_from_json(const Json& doc);

Json lattice_set_to_json(const LatticeSet& s);
LatticeSet lattice_set_from_json(const Json& doc);

Json chain_spec_to_json(const ChainSpec& spec);
ChainSpec chain_spec_from_json(const Json& doc);

Json repr_to_json(const ReprOfOne& repr);
Json trace_to_json(const ConstructionTrace& trace);

/// Single line, keys sorted, trailing newline: byte-stable across runs.
std::string dump_document(const Json& doc);

/// Throws Error(SchemaViolation) instead of nlohmann exceptions.
Json parse_document(const std::string& text);

}  // namespace nset
