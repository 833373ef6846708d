#pragma once

#include "nset/box_set.hpp"
#include "nset/interval_set.hpp"

#include <vector>

namespace nset {

/// Union of closed sub-arcs of the unit circle, written as intervals inside
/// [0, 1] with 0 and 1 naming the same point. Canonical: sorted, merged.
class CircleCover {
 public:
  static CircleCover from_arcs(const std::vector<Interval>& raw);

  const std::vector<Interval>& arcs() const { return arcs_; }

  /// True when the arcs cover the whole circle, i.e. merge to [0, 1].
  bool full() const;

  friend bool operator==(const CircleCover&, const CircleCover&) = default;

 private:
  CircleCover() = default;
  std::vector<Interval> arcs_;
};

/// Image of K under x -> x - floor(x). Each interval is split at integer
/// points; a piece ending exactly at an integer contributes endpoint 1.
CircleCover circle_project(const IntervalSet& k);

/// True iff every real is congruent mod 1 to a point of K, i.e. the
/// projection covers the whole circle.
bool is_nset(const IntervalSet& k);

/// n-dimensional coverage test: do the boxes, reduced mod the integer
/// lattice, cover the whole torus? Decided exactly on the elementary cell
/// grid spanned by the per-axis fractional breakpoints.
bool is_nset_nd(const BoxSet& k);

}  // namespace nset
