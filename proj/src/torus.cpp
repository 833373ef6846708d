#include "nset/torus.hpp"

#include "nset/error.hpp"

#include <algorithm>
#include <set>

namespace nset {

CircleCover CircleCover::from_arcs(const std::vector<Interval>& raw) {
  CircleCover out;
  if (raw.empty()) return out;
  for (const Interval& arc : raw) {
    if (arc.lo > arc.hi || arc.lo < 0 || arc.hi > 1) {
      throw Error(ErrorKind::InvalidParams, "arc outside [0,1]");
    }
  }
  std::vector<Interval> sorted = raw;
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& a, const Interval& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              return a.hi < b.hi;
            });
  out.arcs_.push_back(sorted.front());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    Interval& last = out.arcs_.back();
    if (sorted[i].lo <= last.hi) {
      if (sorted[i].hi > last.hi) last.hi = sorted[i].hi;
    } else {
      out.arcs_.push_back(sorted[i]);
    }
  }
  return out;
}

bool CircleCover::full() const {
  return arcs_.size() == 1 && arcs_.front().lo == 0 && arcs_.front().hi == 1;
}

namespace {

// Fractional projection of one closed interval: one arc, two arcs when the
// interval straddles an integer, or the full circle when it is at least one
// unit long.
void project_interval(const Interval& iv, std::vector<Interval>& arcs) {
  if (iv.length() >= 1) {
    arcs.push_back({Rational(0), Rational(1)});
    return;
  }
  Rational start = frac_part(iv.lo);
  Rational end = start + iv.length();
  if (end <= 1) {
    arcs.push_back({start, end});
  } else {
    arcs.push_back({start, Rational(1)});
    arcs.push_back({Rational(0), end - 1});
  }
}

}  // namespace

CircleCover circle_project(const IntervalSet& k) {
  std::vector<Interval> arcs;
  for (const Interval& iv : k.intervals()) {
    project_interval(iv, arcs);
  }
  return CircleCover::from_arcs(arcs);
}

bool is_nset(const IntervalSet& k) { return circle_project(k).full(); }

namespace {

// Per-axis pieces of a box side reduced mod 1 (one or two intervals in
// [0,1], or [0,1] itself).
std::vector<Interval> axis_pieces(const Interval& side) {
  std::vector<Interval> pieces;
  project_interval(side, pieces);
  return pieces;
}

}  // namespace

bool is_nset_nd(const BoxSet& k) {
  const std::size_t n = k.dimension();

  // Projected sub-boxes (each input box splits into up to 2^n pieces) and
  // the per-axis breakpoint grids they induce.
  std::vector<std::vector<std::vector<Interval>>> per_box_axis_pieces;
  std::vector<std::set<Rational>> breaks(n);
  for (std::size_t d = 0; d < n; ++d) {
    breaks[d].insert(Rational(0));
    breaks[d].insert(Rational(1));
  }
  for (const Box& box : k.boxes()) {
    std::vector<std::vector<Interval>> axes(n);
    for (std::size_t d = 0; d < n; ++d) {
      axes[d] = axis_pieces(box[d]);
      for (const Interval& piece : axes[d]) {
        breaks[d].insert(piece.lo);
        breaks[d].insert(piece.hi);
      }
    }
    per_box_axis_pieces.push_back(std::move(axes));
  }

  std::vector<std::vector<Rational>> grid(n);
  for (std::size_t d = 0; d < n; ++d) {
    grid[d].assign(breaks[d].begin(), breaks[d].end());
  }

  // A cell is covered iff its center is inside some projected sub-box: box
  // faces lie on grid lines, so a box containing the center contains the
  // whole closed cell.
  std::vector<std::size_t> cell(n, 0);
  while (true) {
    std::vector<Rational> center(n);
    for (std::size_t d = 0; d < n; ++d) {
      center[d] = (grid[d][cell[d]] + grid[d][cell[d] + 1]) / 2;
    }
    bool covered = false;
    for (const auto& axes : per_box_axis_pieces) {
      // The sub-boxes of one input box are the products of its per-axis
      // pieces; the center lies in one of them iff every axis has a piece
      // containing the center coordinate.
      bool all_axes = true;
      for (std::size_t d = 0; d < n && all_axes; ++d) {
        bool axis_hit = false;
        for (const Interval& piece : axes[d]) {
          if (piece.lo <= center[d] && center[d] <= piece.hi) {
            axis_hit = true;
            break;
          }
        }
        all_axes = axis_hit;
      }
      if (all_axes) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;

    // Next cell, odometer style.
    std::size_t d = 0;
    while (d < n) {
      if (++cell[d] + 1 < grid[d].size()) break;
      cell[d] = 0;
      ++d;
    }
    if (d == n) break;
  }
  return true;
}

}  // namespace nset
