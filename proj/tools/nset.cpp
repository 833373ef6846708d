// Command-line surface: one subcommand per library operation, documents on
// stdin/stdout as JSON with exact rationals. Exit status 0 on success, 1 on
// domain errors, 2 on malformed input.

#include "nset/construct.hpp"
#include "nset/diffset.hpp"
#include "nset/error.hpp"
#include "nset/interval_set.hpp"
#include "nset/io.hpp"
#include "nset/lattice.hpp"
#include "nset/torus.hpp"
#include "nset/weights.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nset::Json;

struct StreamOptions {
  std::string input_path;
  std::string output_path;
};

void add_stream_options(CLI::App* cmd, StreamOptions& io) {
  cmd->add_option("--input,-i", io.input_path,
                  "read the input document from a file instead of stdin");
  cmd->add_option("--output,-o", io.output_path,
                  "write the output document to a file instead of stdout");
}

std::string read_all(const StreamOptions& io) {
  if (io.input_path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(io.input_path);
  if (!in) {
    throw nset::Error(nset::ErrorKind::SchemaViolation,
                      "cannot open input file: " + io.input_path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_all(const StreamOptions& io, const std::string& text) {
  if (io.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(io.output_path);
  if (!out) {
    throw nset::Error(nset::ErrorKind::SchemaViolation,
                      "cannot open output file: " + io.output_path);
  }
  out << text;
}

Json parse_input(const StreamOptions& io) {
  return nset::parse_document(read_all(io));
}

void emit(const StreamOptions& io, const Json& doc) {
  write_all(io, nset::dump_document(doc));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact arithmetic for difference sets of compact sets that cover the "
      "torus"};
  app.require_subcommand(1);

  StreamOptions io;
  // Deterministic run parameters; all search knobs are explicit flags.
  unsigned weight_cap = nset::kDefaultWeightCap;
  unsigned grid = 4;
  long shift_bound = 4;
  std::size_t max_components = 4;
  std::string shift_text;
  bool with_trace = false;

  // Each handler returns the process exit code.
  std::function<int()> action;

  auto* canon = app.add_subcommand(
      "canon", "sort and merge an interval set into canonical form");
  add_stream_options(canon, io);
  canon->callback([&] {
    action = [&]() {
      emit(io, nset::interval_set_to_json(
                   nset::interval_set_from_json(parse_input(io))));
      return 0;
    };
  });

  auto* check = app.add_subcommand(
      "check-nset",
      "does the interval set cover the circle after reduction mod 1?");
  add_stream_options(check, io);
  check->callback([&] {
    action = [&]() {
      bool ok = nset::is_nset(nset::interval_set_from_json(parse_input(io)));
      emit(io, Json{{"is_nset", ok}});
      return 0;
    };
  });

  auto* diffs = app.add_subcommand(
      "diffs", "positive integer differences of an interval set");
  add_stream_options(diffs, io);
  diffs->callback([&] {
    action = [&]() {
      emit(io, nset::integer_set_to_json(nset::integer_differences(
                   nset::interval_set_from_json(parse_input(io)))));
      return 0;
    };
  });

  auto* wit = app.add_subcommand(
      "witnesses",
      "the intersection of the set with its own translate by --shift");
  add_stream_options(wit, io);
  wit->add_option("--shift", shift_text, "integer translation amount")
      ->required();
  wit->callback([&] {
    action = [&]() {
      auto k = nset::interval_set_from_json(parse_input(io));
      auto w = nset::witnesses(k, nset::parse_integer(shift_text));
      if (w) {
        emit(io, nset::interval_set_to_json(*w));
      } else {
        emit(io, Json{{"intervals", Json::array()}});
      }
      return 0;
    };
  });

  auto* pairs = app.add_subcommand(
      "pairs",
      "count two-element subsets whose members share a fractional part");
  add_stream_options(pairs, io);
  pairs->callback([&] {
    action = [&]() {
      auto count =
          nset::matched_pair_count(nset::interval_set_from_json(parse_input(io)));
      emit(io, Json{{"pair_count", count.is_finite()
                                       ? nset::format_integer(count.count())
                                       : std::string("infinite")}});
      return 0;
    };
  });

  auto* chain = app.add_subcommand(
      "chain-build",
      "build the block chain for given shifts and breakpoints");
  add_stream_options(chain, io);
  chain->callback([&] {
    action = [&]() {
      auto result =
          nset::chain_build(nset::chain_spec_from_json(parse_input(io)));
      emit(io,
           Json{{"interval_set", nset::interval_set_to_json(result.set)},
                {"predicted_differences",
                 nset::integer_set_to_json(result.predicted)}});
      return 0;
    };
  });

  auto* build = app.add_subcommand(
      "build", "construct a compact set realizing the given differences");
  add_stream_options(build, io);
  build->add_option("--max-weight", weight_cap,
                    "cap for the representation search");
  build->add_flag("--trace", with_trace, "include the construction trace");
  build->callback([&] {
    action = [&]() {
      auto result = nset::build_nset(
          nset::integer_set_from_json(parse_input(io)), weight_cap);
      if (with_trace) {
        emit(io, Json{{"interval_set", nset::interval_set_to_json(result.set)},
                      {"trace", nset::trace_to_json(result.trace)}});
      } else {
        emit(io, nset::interval_set_to_json(result.set));
      }
      return 0;
    };
  });

  auto* verify = app.add_subcommand(
      "verify", "build, then check the differences come back out equal");
  add_stream_options(verify, io);
  verify->add_option("--max-weight", weight_cap,
                     "cap for the representation search");
  verify->callback([&] {
    action = [&]() {
      bool ok = nset::validate_roundtrip(
          nset::integer_set_from_json(parse_input(io)), weight_cap);
      emit(io, Json{{"roundtrip", ok}});
      return ok ? 0 : 1;
    };
  });

  auto* weights = app.add_subcommand(
      "weights", "additive weight, component upper bound and certificate");
  add_stream_options(weights, io);
  weights->add_option("--max-weight", weight_cap,
                      "cap for the representation search");
  weights->callback([&] {
    action = [&]() {
      auto a = nset::integer_set_from_json(parse_input(io));
      auto repr = nset::represent_one(a, weight_cap);
      emit(io, Json{{"add", nset::format_integer(repr.weight)},
                    {"geo_upper",
                     nset::format_integer(nset::geo_upper(a, weight_cap))},
                    {"certificate", nset::repr_to_json(repr)}});
      return 0;
    };
  });

  auto* geo = app.add_subcommand(
      "geo-search",
      "least component count over the cell-tiling family, if any");
  add_stream_options(geo, io);
  geo->add_option("--max-components,-m", max_components,
                  "largest component count to accept");
  geo->add_option("--grid,-D", grid, "grid denominator");
  geo->add_option("--shift-bound,-B", shift_bound, "largest |shift|");
  geo->callback([&] {
    action = [&]() {
      auto found =
          nset::geo_search(nset::integer_set_from_json(parse_input(io)),
                           max_components, grid, shift_bound);
      emit(io, Json{{"found", found ? Json(*found) : Json(nullptr)}});
      return 0;
    };
  });

  auto* nd_diffs = app.add_subcommand(
      "nd-diffs", "lattice difference vectors of a box set");
  add_stream_options(nd_diffs, io);
  nd_diffs->callback([&] {
    action = [&]() {
      emit(io, nset::lattice_set_to_json(nset::box_differences(
                   nset::box_set_from_json(parse_input(io)))));
      return 0;
    };
  });

  auto* nd_check = app.add_subcommand(
      "nd-check", "does the box set cover the torus?");
  add_stream_options(nd_check, io);
  nd_check->callback([&] {
    action = [&]() {
      bool ok = nset::is_nset_nd(nset::box_set_from_json(parse_input(io)));
      emit(io, Json{{"is_nset", ok}});
      return 0;
    };
  });

  auto* explore = app.add_subcommand(
      "explore2d",
      "search cell tilings of the 2-torus for a witness of the target "
      "difference set");
  add_stream_options(explore, io);
  explore->add_option("--grid,-D", grid, "grid denominator");
  explore->add_option("--shift-bound,-B", shift_bound, "largest |shift|");
  explore->callback([&] {
    action = [&]() {
      auto witness =
          nset::explore2d(nset::lattice_set_from_json(parse_input(io)), grid,
                          shift_bound);
      if (witness) {
        emit(io, Json{{"found", true},
                      {"box_set", nset::box_set_to_json(*witness)}});
      } else {
        emit(io, Json{{"found", false}});
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // unknown command or bad flags
  }

  try {
    return action();
  } catch (const nset::Error& e) {
    Json err{{"error",
              Json{{"kind", nset::kind_name(e.kind())},
                   {"message", e.what()}}}};
    std::cout << nset::dump_document(err);
    return e.kind() == nset::ErrorKind::SchemaViolation ? 2 : 1;
  } catch (const std::exception& e) {
    Json err{{"error", Json{{"kind", "Internal"}, {"message", e.what()}}}};
    std::cout << nset::dump_document(err);
    return 1;
  }
}
