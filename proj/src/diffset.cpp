#include "nset/diffset.hpp"

#include "nset/error.hpp"

#include <algorithm>
#include <set>

namespace nset {

PositiveIntegerSet PositiveIntegerSet::make(const std::vector<Integer>& raw) {
  for (const Integer& v : raw) {
    if (v < 1) {
      throw Error(ErrorKind::NonPositiveElement,
                  "element " + v.str() + " is not a positive integer");
    }
  }
  std::vector<Integer> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  PositiveIntegerSet out;
  out.values_ = std::move(sorted);
  return out;
}

bool PositiveIntegerSet::contains(const Integer& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

Integer gcd_of(const PositiveIntegerSet& a) { return gcd_all(a.values()); }

PositiveIntegerSet integer_differences(const IntervalSet& k) {
  std::set<Integer> found;
  for (const Interval& upper : k.intervals()) {
    for (const Interval& lower : k.intervals()) {
      // K meets (a + K) iff a lies in [upper.lo - lower.hi,
      // upper.hi - lower.lo] for some interval pair.
      Integer a = ceil_int(upper.lo - lower.hi);
      const Integer last = floor_int(upper.hi - lower.lo);
      if (a < 1) a = 1;
      for (; a <= last; ++a) {
        found.insert(a);
      }
    }
  }
  return PositiveIntegerSet::make({found.begin(), found.end()});
}

std::optional<IntervalSet> witnesses(const IntervalSet& k,
                                     const Integer& shift) {
  if (shift < 0) {
    throw Error(ErrorKind::NegativeShift,
                "shift " + shift.str() +
                    " is negative; use its absolute value (difference sets "
                    "are symmetric)");
  }
  if (shift == 0) return k;
  return intersect(k, translate(k, Rational(shift)));
}

PairCount matched_pair_count(const IntervalSet& k) {
  Integer total = 0;
  const PositiveIntegerSet diffs = integer_differences(k);
  for (const Integer& a : diffs.values()) {
    std::optional<IntervalSet> w = witnesses(k, a);
    // a came from the difference set, so the witness set is nonempty.
    for (const Interval& iv : w->intervals()) {
      if (!iv.is_point()) return PairCount::infinite();
    }
    total += static_cast<long>(w->size());
  }
  return PairCount::finite(total);
}

}  // namespace nset
