#pragma once

#include "nset/interval_set.hpp"
#include "nset/rational.hpp"

#include <vector>

namespace nset {

/// Axis-aligned box: one closed interval per axis.
using Box = std::vector<Interval>;

/// Finite union of axis-aligned boxes with rational corners; the compact
/// n-dimensional counterpart of IntervalSet. Canonical form drops boxes
/// contained in others and sorts lexicographically by corner.
class BoxSet {
 public:
  /// Throws EmptyInput, ReversedEndpoints, or DimensionMismatch when a box
  /// does not have exactly `dimension` axes.
  static BoxSet make(std::size_t dimension, const std::vector<Box>& raw);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Box>& boxes() const { return boxes_; }

  bool contains(const std::vector<Rational>& point) const;

  friend bool operator==(const BoxSet&, const BoxSet&) = default;

 private:
  BoxSet() = default;
  std::size_t dimension_ = 0;
  std::vector<Box> boxes_;
};

}  // namespace nset
