#include "nset/interval_set.hpp"

#include "nset/error.hpp"

#include <algorithm>

namespace nset {

IntervalSet IntervalSet::canonicalize(const std::vector<Interval>& raw) {
  if (raw.empty()) {
    throw Error(ErrorKind::EmptyInput, "interval list is empty");
  }
  for (const Interval& iv : raw) {
    if (iv.lo > iv.hi) {
      throw Error(ErrorKind::ReversedEndpoints,
                  "interval has lo > hi: [" + format_rational(iv.lo) + ", " +
                      format_rational(iv.hi) + "]");
    }
  }
  std::vector<Interval> sorted = raw;
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& a, const Interval& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              return a.hi < b.hi;
            });
  IntervalSet out;
  out.parts_.push_back(sorted.front());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    Interval& last = out.parts_.back();
    // Touching intervals merge: closed sets sharing an endpoint are
    // connected.
    if (sorted[i].lo <= last.hi) {
      if (sorted[i].hi > last.hi) last.hi = sorted[i].hi;
    } else {
      out.parts_.push_back(sorted[i]);
    }
  }
  return out;
}

bool IntervalSet::contains(const Rational& x) const {
  for (const Interval& iv : parts_) {
    if (iv.lo > x) return false;
    if (x <= iv.hi) return true;
  }
  return false;
}

std::size_t components(const IntervalSet& k) { return k.size(); }

std::pair<Rational, Rational> bounds(const IntervalSet& k) {
  return {k.intervals().front().lo, k.intervals().back().hi};
}

IntervalSet translate(const IntervalSet& k, const Rational& offset) {
  std::vector<Interval> moved;
  moved.reserve(k.size());
  for (const Interval& iv : k.intervals()) {
    moved.push_back({iv.lo + offset, iv.hi + offset});
  }
  return IntervalSet::canonicalize(moved);
}

std::optional<IntervalSet> intersect(const IntervalSet& a,
                                     const IntervalSet& b) {
  std::vector<Interval> pieces;
  for (const Interval& x : a.intervals()) {
    for (const Interval& y : b.intervals()) {
      Rational lo = std::max(x.lo, y.lo);
      Rational hi = std::min(x.hi, y.hi);
      if (lo <= hi) pieces.push_back({lo, hi});
    }
  }
  if (pieces.empty()) return std::nullopt;
  return IntervalSet::canonicalize(pieces);
}

Rational total_length(const IntervalSet& k) {
  Rational sum = 0;
  for (const Interval& iv : k.intervals()) {
    sum += iv.length();
  }
  return sum;
}

}  // namespace nset
