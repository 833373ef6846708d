#pragma once

#include "nset/diffset.hpp"
#include "nset/interval_set.hpp"
#include "nset/weights.hpp"

#include <vector>

namespace nset {

/// Input data for the chain construction: w integer block shifts b_0..b_{w-1}
/// and w+1 strictly increasing rational breakpoints t_0 < ... < t_w with
/// t_w = t_0 + 1. Adjacent block shifts must differ and 1 + b_{w-1} != b_0.
struct ChainSpec {
  std::vector<Integer> block_shifts;
  std::vector<Rational> breakpoints;
};

struct ChainResult {
  IntervalSet set;
  PositiveIntegerSet predicted;  // the difference set the chain realizes
};

/// Builds the union of blocks [b_k + t_k, b_k + t_{k+1}]. The blocks tile
/// the circle, so the result always covers it; its positive integer
/// differences are exactly {|b_k - b_{k-1}|} plus the wrap term
/// |1 + b_{w-1} - b_0|, returned as `predicted`.
/// Throws InvalidChainSpec naming the violated invariant.
ChainResult chain_build(const ChainSpec& spec);

struct AttachedPoint {
  Rational position;
  Integer element;  // the difference this isolated point realizes

  friend bool operator==(const AttachedPoint&, const AttachedPoint&) = default;
};

struct ConstructionTrace {
  ReprOfOne repr;
  std::vector<Integer> deltas;        // per-step increments, one per block
  std::vector<Integer> block_shifts;  // prefix sums of deltas, b_0 = 0
  std::vector<AttachedPoint> attached;
};

struct BuildResult {
  IntervalSet set;
  ConstructionTrace trace;
};

/// Inverse construction: from a relatively prime set A, a compact set K
/// covering the circle with integer_differences(K) == A. Uses the minimal
/// representation of 1 from represent_one, chains one block per coefficient
/// unit, and realizes each unused element by an isolated point attached
/// inside the first block's fractional range.
BuildResult build_nset(const PositiveIntegerSet& a,
                       unsigned weight_cap = kDefaultWeightCap);

/// is_nset(build_nset(A)) && integer_differences(build_nset(A)) == A.
bool validate_roundtrip(const PositiveIntegerSet& a,
                        unsigned weight_cap = kDefaultWeightCap);

}  // namespace nset
