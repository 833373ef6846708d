#include "nset/io.hpp"

#include "nset/error.hpp"

#include <cstdint>
#include <limits>

namespace nset {

namespace {

void require_keys(const Json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) {
    throw Error(ErrorKind::SchemaViolation, "expected a JSON object");
  }
  for (const char* key : keys) {
    if (!j.contains(key)) {
      throw Error(ErrorKind::SchemaViolation,
                  std::string("missing key \"") + key + "\"");
    }
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : keys) {
      if (item.key() == key) known = true;
    }
    if (!known) {
      throw Error(ErrorKind::SchemaViolation,
                  "unknown key \"" + item.key() + "\"");
    }
  }
}

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw Error(ErrorKind::SchemaViolation,
                std::string("expected an array for ") + what);
  }
  return j;
}

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw Error(ErrorKind::SchemaViolation,
              "expected a rational as \"p/q\" string or integer, got " +
                  v.dump());
}

Integer integer_from_json(const Json& v) {
  if (v.is_string()) return parse_integer(v.get<std::string>());
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  throw Error(ErrorKind::SchemaViolation,
              "expected an integer, got " + v.dump());
}

// Integers that fit in int64 are emitted as JSON numbers, larger ones as
// strings.
Json integer_to_json_number(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(format_integer(v));
}

std::size_t dimension_from_json(const Json& v) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    throw Error(ErrorKind::SchemaViolation,
                "\"dimension\" must be a positive integer");
  }
  return static_cast<std::size_t>(v.get<std::int64_t>());
}

Interval interval_from_json(const Json& v) {
  require_array(v, "an interval");
  if (v.size() != 2) {
    throw Error(ErrorKind::SchemaViolation,
                "an interval needs exactly two endpoints");
  }
  return {rational_from_json(v[0]), rational_from_json(v[1])};
}

Json interval_to_json(const Interval& iv) {
  return Json::array({format_rational(iv.lo), format_rational(iv.hi)});
}

}  // namespace

Json interval_set_to_json(const IntervalSet& k) {
  Json intervals = Json::array();
  for (const Interval& iv : k.intervals()) {
    intervals.push_back(interval_to_json(iv));
  }
  return Json{{"intervals", intervals}};
}

IntervalSet interval_set_from_json(const Json& doc) {
  require_keys(doc, {"intervals"});
  std::vector<Interval> raw;
  for (const Json& item : require_array(doc["intervals"], "\"intervals\"")) {
    raw.push_back(interval_from_json(item));
  }
  return IntervalSet::canonicalize(raw);
}

Json integer_set_to_json(const PositiveIntegerSet& a) {
  Json values = Json::array();
  for (const Integer& v : a.values()) {
    values.push_back(format_integer(v));
  }
  return Json{{"values", values}};
}

PositiveIntegerSet integer_set_from_json(const Json& doc) {
  require_keys(doc, {"values"});
  std::vector<Integer> raw;
  for (const Json& item : require_array(doc["values"], "\"values\"")) {
    raw.push_back(integer_from_json(item));
  }
  return PositiveIntegerSet::make(raw);
}

Json box_set_to_json(const BoxSet& k) {
  Json boxes = Json::array();
  for (const Box& box : k.boxes()) {
    Json sides = Json::array();
    for (const Interval& side : box) {
      sides.push_back(interval_to_json(side));
    }
    boxes.push_back(sides);
  }
  return Json{{"dimension", k.dimension()}, {"boxes", boxes}};
}

BoxSet box_set_from_json(const Json& doc) {
  require_keys(doc, {"dimension", "boxes"});
  const std::size_t dim = dimension_from_json(doc["dimension"]);
  std::vector<Box> raw;
  for (const Json& item : require_array(doc["boxes"], "\"boxes\"")) {
    Box box;
    for (const Json& side : require_array(item, "a box")) {
      box.push_back(interval_from_json(side));
    }
    raw.push_back(std::move(box));
  }
  return BoxSet::make(dim, raw);
}

Json lattice_set_to_json(const LatticeSet& s) {
  Json vectors = Json::array();
  for (const LatticeVector& v : s.vectors()) {
    Json coords = Json::array();
    for (const Integer& c : v) {
      coords.push_back(integer_to_json_number(c));
    }
    vectors.push_back(coords);
  }
  return Json{{"dimension", s.dimension()}, {"vectors", vectors}};
}

LatticeSet lattice_set_from_json(const Json& doc) {
  require_keys(doc, {"dimension", "vectors"});
  const std::size_t dim = dimension_from_json(doc["dimension"]);
  std::vector<LatticeVector> raw;
  for (const Json& item : require_array(doc["vectors"], "\"vectors\"")) {
    LatticeVector v;
    for (const Json& coord : require_array(item, "a vector")) {
      v.push_back(integer_from_json(coord));
    }
    raw.push_back(std::move(v));
  }
  return LatticeSet::make(dim, raw);
}

Json chain_spec_to_json(const ChainSpec& spec) {
  Json b = Json::array();
  for (const Integer& v : spec.block_shifts) {
    b.push_back(integer_to_json_number(v));
  }
  Json lambda = Json::array();
  for (const Rational& v : spec.breakpoints) {
    lambda.push_back(format_rational(v));
  }
  return Json{{"b", b}, {"lambda", lambda}};
}

ChainSpec chain_spec_from_json(const Json& doc) {
  require_keys(doc, {"b", "lambda"});
  ChainSpec spec;
  for (const Json& item : require_array(doc["b"], "\"b\"")) {
    spec.block_shifts.push_back(integer_from_json(item));
  }
  for (const Json& item : require_array(doc["lambda"], "\"lambda\"")) {
    spec.breakpoints.push_back(rational_from_json(item));
  }
  return spec;
}

Json repr_to_json(const ReprOfOne& repr) {
  Json terms = Json::array();
  std::string equation;
  for (const ReprTerm& term : repr.terms) {
    terms.push_back(Json{{"element", format_integer(term.element)},
                         {"sign", term.sign},
                         {"multiplicity", format_integer(term.multiplicity)}});
    if (equation.empty()) {
      equation = term.sign < 0 ? "-" : "";
    } else {
      equation += term.sign < 0 ? " - " : " + ";
    }
    equation +=
        format_integer(term.multiplicity) + "*" + format_integer(term.element);
  }
  equation += " = 1";
  Json unused = Json::array();
  for (const Integer& v : repr.unused) {
    unused.push_back(format_integer(v));
  }
  return Json{{"terms", terms},
              {"unused", unused},
              {"weight", format_integer(repr.weight)},
              {"equation", equation}};
}

Json trace_to_json(const ConstructionTrace& trace) {
  Json deltas = Json::array();
  for (const Integer& v : trace.deltas) {
    deltas.push_back(integer_to_json_number(v));
  }
  Json shifts = Json::array();
  for (const Integer& v : trace.block_shifts) {
    shifts.push_back(integer_to_json_number(v));
  }
  Json attached = Json::array();
  for (const AttachedPoint& p : trace.attached) {
    attached.push_back(Json{{"position", format_rational(p.position)},
                            {"element", format_integer(p.element)}});
  }
  return Json{{"representation", repr_to_json(trace.repr)},
              {"deltas", deltas},
              {"block_shifts", shifts},
              {"attached_points", attached}};
}

std::string dump_document(const Json& doc) { return doc.dump() + "\n"; }

Json parse_document(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(ErrorKind::SchemaViolation, "malformed JSON input");
  }
  return doc;
}

}  // namespace nset
