#pragma once

#include "nset/interval_set.hpp"
#include "nset/rational.hpp"

#include <optional>
#include <vector>

namespace nset {

/// Strictly ascending finite set of positive integers.
class PositiveIntegerSet {
 public:
  /// Sorts and deduplicates. Throws NonPositiveElement on values < 1.
  static PositiveIntegerSet make(const std::vector<Integer>& raw);

  const std::vector<Integer>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  bool contains(const Integer& v) const;

  friend bool operator==(const PositiveIntegerSet&,
                         const PositiveIntegerSet&) = default;

 private:
  PositiveIntegerSet() = default;
  std::vector<Integer> values_;
};

/// gcd of the elements; 0 when empty.
Integer gcd_of(const PositiveIntegerSet& a);

/// The positive integers a with K meeting its own translate by a, i.e.
/// (K - K) intersected with the positive integers. Finite because K is
/// bounded. Computed from the pairwise interval difference ranges.
PositiveIntegerSet integer_differences(const IntervalSet& k);

/// K intersected with (shift + K): all x with both x and x - shift in K.
/// nullopt when the shift is not realized. shift = 0 returns K itself.
/// Throws NegativeShift for shift < 0 (use |shift|; differences are
/// symmetric).
std::optional<IntervalSet> witnesses(const IntervalSet& k,
                                     const Integer& shift);

/// Count of two-element subsets {x, y} of K whose elements share a
/// fractional part, or Infinite when a whole interval of such pairs exists.
class PairCount {
 public:
  static PairCount finite(Integer n) { return PairCount(true, std::move(n)); }
  static PairCount infinite() { return PairCount(false, 0); }

  bool is_finite() const { return finite_; }
  const Integer& count() const { return count_; }

  friend bool operator==(const PairCount&, const PairCount&) = default;

 private:
  PairCount(bool finite, Integer count)
      : finite_(finite), count_(std::move(count)) {}
  bool finite_;
  Integer count_;
};

PairCount matched_pair_count(const IntervalSet& k);

}  // namespace nset
