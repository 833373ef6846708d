#include "nset/construct.hpp"

#include "nset/error.hpp"
#include "nset/torus.hpp"

namespace nset {

namespace {

void validate_chain_spec(const ChainSpec& spec) {
  const std::size_t w = spec.block_shifts.size();
  if (w < 1) {
    throw Error(ErrorKind::InvalidChainSpec, "need at least one block");
  }
  if (spec.breakpoints.size() != w + 1) {
    throw Error(ErrorKind::InvalidChainSpec,
                "expected " + std::to_string(w + 1) + " breakpoints, got " +
                    std::to_string(spec.breakpoints.size()));
  }
  for (std::size_t k = 0; k + 1 <= w; ++k) {
    if (!(spec.breakpoints[k] < spec.breakpoints[k + 1])) {
      throw Error(ErrorKind::InvalidChainSpec,
                  "breakpoints not strictly increasing at index " +
                      std::to_string(k + 1));
    }
  }
  if (spec.breakpoints.back() != spec.breakpoints.front() + 1) {
    throw Error(ErrorKind::InvalidChainSpec,
                "last breakpoint must equal first + 1");
  }
  for (std::size_t k = 1; k < w; ++k) {
    if (spec.block_shifts[k - 1] == spec.block_shifts[k]) {
      throw Error(ErrorKind::InvalidChainSpec,
                  "adjacent block shifts equal at index " + std::to_string(k));
    }
  }
  if (1 + spec.block_shifts.back() == spec.block_shifts.front()) {
    throw Error(ErrorKind::InvalidChainSpec,
                "wrap shift 1 + b_last must differ from b_first");
  }
}

}  // namespace

ChainResult chain_build(const ChainSpec& spec) {
  validate_chain_spec(spec);
  const std::size_t w = spec.block_shifts.size();

  std::vector<Interval> blocks;
  blocks.reserve(w);
  for (std::size_t k = 0; k < w; ++k) {
    Rational shift(spec.block_shifts[k]);
    blocks.push_back(
        {shift + spec.breakpoints[k], shift + spec.breakpoints[k + 1]});
  }

  std::vector<Integer> predicted;
  for (std::size_t k = 1; k < w; ++k) {
    predicted.push_back(
        abs(spec.block_shifts[k] - spec.block_shifts[k - 1]));
  }
  predicted.push_back(abs(1 + spec.block_shifts.back() -
                          spec.block_shifts.front()));

  return {IntervalSet::canonicalize(blocks),
          PositiveIntegerSet::make(predicted)};
}

BuildResult build_nset(const PositiveIntegerSet& a, unsigned weight_cap) {
  if (a.empty()) {
    throw Error(ErrorKind::EmptySet, "cannot build from an empty set");
  }
  ReprOfOne repr = represent_one(a, weight_cap);

  // One block per coefficient unit: multiplicity copies of -sign * element,
  // used elements in ascending order.
  std::vector<Integer> deltas;
  for (const ReprTerm& term : repr.terms) {
    const long copies = term.multiplicity.convert_to<long>();
    for (long c = 0; c < copies; ++c) {
      deltas.push_back(Integer(-term.sign) * term.element);
    }
  }
  const std::size_t w = deltas.size();

  std::vector<Integer> block_shifts;
  block_shifts.reserve(w);
  Integer acc = 0;
  block_shifts.push_back(acc);
  for (std::size_t k = 1; k < w; ++k) {
    acc += deltas[k - 1];
    block_shifts.push_back(acc);
  }

  std::vector<Rational> breakpoints;
  breakpoints.reserve(w + 1);
  for (std::size_t k = 0; k <= w; ++k) {
    breakpoints.push_back(make_rational(Integer(k), Integer(w)));
  }

  ChainResult chain = chain_build({block_shifts, breakpoints});

  // Unused elements become isolated points. Their fractional parts lie
  // strictly inside (0, 1/w), a range only the first block covers, and each
  // point exceeds 1, so they never touch the chain.
  std::vector<AttachedPoint> attached;
  const std::size_t leftover = repr.unused.size();
  std::vector<Interval> pieces = chain.set.intervals();
  for (std::size_t i = 1; i <= leftover; ++i) {
    Rational offset =
        make_rational(Integer(i), Integer(w) * Integer(leftover + 1));
    Rational position = Rational(repr.unused[i - 1]) + offset;
    attached.push_back({position, repr.unused[i - 1]});
    pieces.push_back({position, position});
  }

  BuildResult out{IntervalSet::canonicalize(pieces),
                  {std::move(repr), std::move(deltas), std::move(block_shifts),
                   std::move(attached)}};
  return out;
}

bool validate_roundtrip(const PositiveIntegerSet& a, unsigned weight_cap) {
  BuildResult built = build_nset(a, weight_cap);
  return is_nset(built.set) && integer_differences(built.set) == a;
}

}  // namespace nset
