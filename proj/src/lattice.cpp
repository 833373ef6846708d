#include "nset/lattice.hpp"

#include "nset/error.hpp"
#include "nset/torus.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace nset {

LatticeSet box_differences(const BoxSet& k) {
  const std::size_t n = k.dimension();
  std::set<LatticeVector> found;

  for (const Box& upper : k.boxes()) {
    for (const Box& lower : k.boxes()) {
      std::vector<Integer> lo(n), hi(n);
      bool nonempty = true;
      for (std::size_t d = 0; d < n && nonempty; ++d) {
        lo[d] = ceil_int(upper[d].lo - lower[d].hi);
        hi[d] = floor_int(upper[d].hi - lower[d].lo);
        nonempty = lo[d] <= hi[d];
      }
      if (!nonempty) continue;

      LatticeVector v = lo;
      while (true) {
        found.insert(v);
        std::size_t d = 0;
        while (d < n) {
          if (++v[d] <= hi[d]) break;
          v[d] = lo[d];
          ++d;
        }
        if (d == n) break;
      }
    }
  }
  return LatticeSet::make(n, {found.begin(), found.end()});
}

bool generates(const LatticeSet& s) {
  if (s.empty()) {
    throw Error(ErrorKind::EmptySet, "no vectors to span with");
  }
  const std::size_t n = s.dimension();
  std::vector<LatticeVector> cols = s.vectors();

  // Integer column reduction: clear each row to a single pivot by repeated
  // division steps; the span is the full lattice iff every pivot is +-1.
  std::size_t pivot = 0;
  for (std::size_t row = 0; row < n; ++row) {
    while (true) {
      std::size_t least = cols.size();
      for (std::size_t c = pivot; c < cols.size(); ++c) {
        if (cols[c][row] == 0) continue;
        if (least == cols.size() ||
            abs(cols[c][row]) < abs(cols[least][row])) {
          least = c;
        }
      }
      if (least == cols.size()) return false;  // row unreachable

      bool reduced_all = true;
      for (std::size_t c = pivot; c < cols.size(); ++c) {
        if (c == least || cols[c][row] == 0) continue;
        Integer q = cols[c][row] / cols[least][row];
        for (std::size_t r = 0; r < n; ++r) {
          cols[c][r] -= q * cols[least][r];
        }
        if (cols[c][row] != 0) reduced_all = false;
      }
      if (reduced_all) {
        std::swap(cols[pivot], cols[least]);
        break;
      }
    }
    if (abs(cols[pivot][row]) != 1) return false;
    ++pivot;
  }
  return true;
}

bool proper_bound_check(const BoxSet& k) {
  const std::size_t n = k.dimension();

  Rational corner_sq = 0;
  for (const Box& box : k.boxes()) {
    Rational sum = 0;
    for (std::size_t d = 0; d < n; ++d) {
      sum += std::max(box[d].lo * box[d].lo, box[d].hi * box[d].hi);
    }
    corner_sq = std::max(corner_sq, sum);
  }

  // Smallest integer q with q^2 >= max corner norm squared, then r = q + 1
  // keeps |x| < r strict for every x in K.
  Integer q = sqrt(ceil_int(corner_sq));
  while (Rational(q * q) < corner_sq) ++q;
  const Rational four_r_sq = Rational(4) * Rational((q + 1) * (q + 1));

  const LatticeSet diffs = box_differences(k);
  for (const LatticeVector& v : diffs.vectors()) {
    Rational norm_sq = 0;
    for (std::size_t d = 0; d < n; ++d) {
      norm_sq += Rational(v[d] * v[d]);
    }
    if (!(norm_sq < four_r_sq)) return false;
  }
  return true;
}

bool difference_generates(const BoxSet& k) {
  if (!is_nset_nd(k)) {
    throw Error(ErrorKind::NotAnNSet,
                "box set does not cover the torus");
  }
  return generates(box_differences(k));
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

struct Shift {
  long x;
  long y;
};

struct Explorer {
  long grid = 1;
  std::vector<Shift> order;  // by |v|_1 then lex
  std::set<std::pair<long, long>> target;
  std::set<std::pair<long, long>> realized;
  std::vector<Shift> assigned;

  // Integer difference vectors realized between cell `c` (shift v) and cell
  // `p` (shift u): per axis the offsets t with delta-1 <= t*D <= delta+1.
  bool scan_pair(long c, const Shift& v, long p, const Shift& u,
                 std::vector<std::pair<long, long>>& added) {
    const long da = c / grid - p / grid;
    const long db = c % grid - p % grid;
    const long tx_lo = ceil_div(da - 1, grid), tx_hi = floor_div(da + 1, grid);
    const long ty_lo = ceil_div(db - 1, grid), ty_hi = floor_div(db + 1, grid);
    for (long tx = tx_lo; tx <= tx_hi; ++tx) {
      for (long ty = ty_lo; ty <= ty_hi; ++ty) {
        const std::pair<long, long> d{v.x - u.x + tx, v.y - u.y + ty};
        if (!target.count(d)) return false;
        if (realized.insert(d).second) added.push_back(d);
        const std::pair<long, long> neg{-d.first, -d.second};
        if (realized.insert(neg).second) added.push_back(neg);
      }
    }
    return true;
  }

  std::optional<std::vector<Shift>> dfs(long cell) {
    const long cells = grid * grid;
    if (cell == cells) {
      if (realized.size() == target.size()) return assigned;
      return std::nullopt;
    }
    for (const Shift& v : order) {
      std::vector<std::pair<long, long>> added;
      bool ok = true;
      assigned.push_back(v);
      for (long p = 0; p <= cell && ok; ++p) {
        ok = scan_pair(cell, v, p, assigned[p], added);
      }
      if (ok) {
        if (auto hit = dfs(cell + 1)) return hit;
      }
      assigned.pop_back();
      for (const auto& d : added) realized.erase(d);
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<BoxSet> explore2d(const LatticeSet& target,
                                unsigned grid_denominator, long shift_bound) {
  if (grid_denominator < 1 || shift_bound < 1) {
    throw Error(ErrorKind::InvalidParams,
                "grid and shift bound must be >= 1");
  }
  if (target.dimension() != 2) {
    throw Error(ErrorKind::InvalidTarget, "target must be 2-dimensional");
  }
  if (target.empty() || !target.contains({Integer(0), Integer(0)})) {
    throw Error(ErrorKind::InvalidTarget, "target must contain 0");
  }
  for (const LatticeVector& v : target.vectors()) {
    if (!target.contains({-v[0], -v[1]})) {
      throw Error(ErrorKind::InvalidTarget, "target must be symmetric");
    }
  }
  if (!generates(target)) {
    throw Error(ErrorKind::InvalidTarget,
                "target must generate the lattice");
  }

  // Differences within the family are bounded coordinatewise by 2B + 1.
  const Integer reach(2 * shift_bound + 1);
  Explorer search;
  for (const LatticeVector& v : target.vectors()) {
    if (abs(v[0]) > reach || abs(v[1]) > reach) return std::nullopt;
    search.target.insert({v[0].convert_to<long>(), v[1].convert_to<long>()});
  }

  search.grid = static_cast<long>(grid_denominator);
  for (long x = -shift_bound; x <= shift_bound; ++x) {
    for (long y = -shift_bound; y <= shift_bound; ++y) {
      search.order.push_back({x, y});
    }
  }
  std::sort(search.order.begin(), search.order.end(),
            [](const Shift& a, const Shift& b) {
              const long na = std::labs(a.x) + std::labs(a.y);
              const long nb = std::labs(b.x) + std::labs(b.y);
              if (na != nb) return na < nb;
              if (a.x != b.x) return a.x < b.x;
              return a.y < b.y;
            });

  auto hit = search.dfs(0);
  if (!hit) return std::nullopt;

  const long d = search.grid;
  std::vector<Box> boxes;
  for (long cell = 0; cell < d * d; ++cell) {
    const Shift& v = (*hit)[cell];
    const long a = cell / d, b = cell % d;
    boxes.push_back(
        {{Rational(v.x) + make_rational(a, d),
          Rational(v.x) + make_rational(a + 1, d)},
         {Rational(v.y) + make_rational(b, d),
          Rational(v.y) + make_rational(b + 1, d)}});
  }
  BoxSet witness = BoxSet::make(2, boxes);

  // Solutions are verified before being reported.
  if (!is_nset_nd(witness) || !(box_differences(witness) == target)) {
    return std::nullopt;
  }
  return witness;
}

}  // namespace nset
