#include "nset/box_set.hpp"

#include "nset/error.hpp"

#include <algorithm>

namespace nset {

namespace {

bool box_less(const Box& a, const Box& b) {
  for (std::size_t d = 0; d < a.size(); ++d) {
    if (a[d].lo != b[d].lo) return a[d].lo < b[d].lo;
    if (a[d].hi != b[d].hi) return a[d].hi < b[d].hi;
  }
  return false;
}

bool box_contained(const Box& inner, const Box& outer) {
  for (std::size_t d = 0; d < inner.size(); ++d) {
    if (inner[d].lo < outer[d].lo || inner[d].hi > outer[d].hi) return false;
  }
  return true;
}

}  // namespace

BoxSet BoxSet::make(std::size_t dimension, const std::vector<Box>& raw) {
  if (dimension < 1) {
    throw Error(ErrorKind::DimensionMismatch, "dimension must be >= 1");
  }
  if (raw.empty()) {
    throw Error(ErrorKind::EmptyInput, "box list is empty");
  }
  for (const Box& box : raw) {
    if (box.size() != dimension) {
      throw Error(ErrorKind::DimensionMismatch,
                  "box has " + std::to_string(box.size()) +
                      " axes, expected " + std::to_string(dimension));
    }
    for (const Interval& side : box) {
      if (side.lo > side.hi) {
        throw Error(ErrorKind::ReversedEndpoints,
                    "box side has lo > hi: [" + format_rational(side.lo) +
                        ", " + format_rational(side.hi) + "]");
      }
    }
  }

  std::vector<Box> kept;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < raw.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!box_contained(raw[i], raw[j])) continue;
      // Of two equal boxes keep the earlier one.
      if (box_contained(raw[j], raw[i]) && j > i) continue;
      redundant = true;
    }
    if (!redundant) kept.push_back(raw[i]);
  }
  std::sort(kept.begin(), kept.end(), box_less);

  BoxSet out;
  out.dimension_ = dimension;
  out.boxes_ = std::move(kept);
  return out;
}

bool BoxSet::contains(const std::vector<Rational>& point) const {
  if (point.size() != dimension_) {
    throw Error(ErrorKind::DimensionMismatch, "point has wrong dimension");
  }
  for (const Box& box : boxes_) {
    bool inside = true;
    for (std::size_t d = 0; d < dimension_ && inside; ++d) {
      inside = box[d].lo <= point[d] && point[d] <= box[d].hi;
    }
    if (inside) return true;
  }
  return false;
}

}  // namespace nset
