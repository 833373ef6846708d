#pragma once

#include "nset/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nset {

/// Closed interval [lo, hi] with lo <= hi. lo == hi encodes a single point.
struct Interval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational length() const { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical finite union of closed rational intervals: sorted by lo,
/// pairwise disjoint with strictly positive gaps (touching or overlapping
/// inputs are merged). Finite, bounded and closed, so it models a compact
/// subset of the real line. Always nonempty.
class IntervalSet {
 public:
  /// Sorts and merges the raw list. Throws EmptyInput on an empty list and
  /// ReversedEndpoints when some pair has lo > hi. Idempotent.
  static IntervalSet canonicalize(const std::vector<Interval>& raw);

  const std::vector<Interval>& intervals() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  bool contains(const Rational& x) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  IntervalSet() = default;
  std::vector<Interval> parts_;
};

/// Number of maximal connected pieces (intervals plus isolated points).
std::size_t components(const IntervalSet& k);

/// (min lo, max hi).
std::pair<Rational, Rational> bounds(const IntervalSet& k);

IntervalSet translate(const IntervalSet& k, const Rational& offset);

/// Set intersection; nullopt when empty.
std::optional<IntervalSet> intersect(const IntervalSet& a,
                                     const IntervalSet& b);

/// Sum of interval lengths (Lebesgue measure).
Rational total_length(const IntervalSet& k);

}  // namespace nset
