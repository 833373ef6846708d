#include "nset/weights.hpp"

#include "nset/construct.hpp"
#include "nset/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace nset {

namespace {

void require_relatively_prime(const PositiveIntegerSet& a) {
  if (gcd_of(a) != 1) {
    throw Error(ErrorKind::NotRelativelyPrime,
                "elements must have gcd 1");
  }
}

// Depth-first enumeration of coefficient vectors with total weight exactly
// `budget` left to spend, visiting per-element keys (|x|, sign) in ascending
// order so the first solution is the tie-break minimum. Signs compare
// numerically: -1 before +1.
bool deepen(const std::vector<Integer>& elems, std::size_t i, long budget,
            const Integer& partial, std::vector<long>& coeffs) {
  const std::size_t n = elems.size();
  if (i == n) {
    return budget == 0 && partial == 1;
  }
  const long trailing = static_cast<long>(n - i - 1);
  const long max_cost = budget - trailing;  // later elements cost >= 1 each
  if (max_cost < 1) return false;
  const Integer& largest = elems.back();

  for (long m = 0; m <= max_cost; ++m) {
    const long cost = std::max<long>(m, 1);
    if (cost > max_cost) break;
    const Integer reach = Integer(budget - cost) * largest;
    if (m == 0) {
      if (abs(1 - partial) <= reach) {
        coeffs[i] = 0;
        if (deepen(elems, i + 1, budget - cost, partial, coeffs)) return true;
      }
      continue;
    }
    for (int sign : {-1, +1}) {
      Integer next = partial + Integer(sign) * Integer(m) * elems[i];
      if (abs(1 - next) > reach) continue;
      coeffs[i] = sign * m;
      if (deepen(elems, i + 1, budget - cost, next, coeffs)) return true;
    }
  }
  return false;
}

}  // namespace

ReprOfOne represent_one(const PositiveIntegerSet& a, unsigned weight_cap) {
  if (a.empty()) {
    throw Error(ErrorKind::EmptySet, "cannot represent 1 by an empty set");
  }
  require_relatively_prime(a);

  const std::vector<Integer>& elems = a.values();
  const std::size_t n = elems.size();
  for (unsigned t = static_cast<unsigned>(n); t <= weight_cap; ++t) {
    std::vector<long> coeffs(n, 0);
    if (!deepen(elems, 0, static_cast<long>(t), Integer(0), coeffs)) continue;

    ReprOfOne repr;
    repr.weight = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs[i] == 0) {
        repr.unused.push_back(elems[i]);
        repr.weight += 1;
      } else {
        repr.terms.push_back({elems[i], coeffs[i] > 0 ? +1 : -1,
                              Integer(std::abs(coeffs[i]))});
        repr.weight += std::abs(coeffs[i]);
      }
    }
    return repr;
  }
  throw Error(ErrorKind::WeightCapExceeded,
              "no representation of weight <= " + std::to_string(weight_cap));
}

Integer add_weight(const PositiveIntegerSet& a, unsigned weight_cap) {
  return represent_one(a, weight_cap).weight;
}

Integer geo_upper(const PositiveIntegerSet& a, unsigned weight_cap) {
  return Integer(components(build_nset(a, weight_cap).set));
}

bool geo_is_interval(const PositiveIntegerSet& a) {
  if (a.empty()) {
    throw Error(ErrorKind::EmptySet, "empty set");
  }
  // A single interval [c, d] realizes exactly {1, ..., floor(d - c)}, so the
  // sorted distinct values must run 1..n.
  return a.values().front() == 1 &&
         a.values().back() == Integer(a.size());
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

// Search state over unit segments n/D scaled to integers: a shifted cell
// copy [s + j/D, s + (j+1)/D] is the segment n = s*D + j. Two segments n, m
// realize exactly the integer differences d with (n-m-1)/D <= d <=
// (n-m+1)/D, so only cells adjacent mod D interact.
struct GeoSearcher {
  long grid = 1;
  long cells = 1;
  std::size_t max_components = 0;
  std::vector<char> wanted;  // indexed by |d|
  std::size_t wanted_count = 0;
  std::vector<std::vector<long>> subset_pool;  // valid shift subsets
  std::vector<long> segments;
  std::set<long> realized;
  std::optional<std::size_t> best;

  bool scan_pair(long n, long m, std::vector<long>& added) {
    const long lo = ceil_div(n - m - 1, grid);
    const long hi = floor_div(n - m + 1, grid);
    for (long d = lo; d <= hi; ++d) {
      const long ad = std::labs(d);
      if (ad == 0) continue;
      if (ad >= static_cast<long>(wanted.size()) || !wanted[ad]) return false;
      if (realized.insert(ad).second) added.push_back(ad);
    }
    return true;
  }

  void leaf() {
    if (realized.size() != wanted_count) return;
    std::vector<long> sorted = segments;
    std::sort(sorted.begin(), sorted.end());
    std::size_t runs = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] != sorted[i - 1] + 1) ++runs;
    }
    if (runs <= max_components && (!best || runs < *best)) best = runs;
  }

  void dfs(long cell) {
    if (best && *best == 1) return;  // cannot improve
    if (cell == cells) {
      leaf();
      return;
    }
    for (const std::vector<long>& subset : subset_pool) {
      const std::size_t seg_base = segments.size();
      std::vector<long> added;
      bool ok = true;
      for (long s : subset) {
        const long n = s * grid + cell;
        segments.push_back(n);
        for (long m : segments) {
          if (!scan_pair(n, m, added)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) dfs(cell + 1);
      segments.resize(seg_base);
      for (long d : added) realized.erase(d);
    }
  }
};

}  // namespace

std::optional<std::size_t> geo_search(const PositiveIntegerSet& a,
                                      std::size_t max_components,
                                      unsigned grid_denominator,
                                      long shift_bound) {
  if (max_components < 1 || grid_denominator < 1 || shift_bound < 1) {
    throw Error(ErrorKind::InvalidParams,
                "max_components, grid and shift bound must all be >= 1");
  }
  // The family enumerates all 2^(2B+1) shift subsets per cell.
  if (shift_bound > 10) {
    throw Error(ErrorKind::InvalidParams,
                "shift bound above 10 is not supported by the subset "
                "enumeration");
  }
  if (a.empty()) {
    throw Error(ErrorKind::EmptySet, "empty set");
  }
  require_relatively_prime(a);

  const long reach = 2 * shift_bound + 1;  // largest realizable difference
  for (const Integer& v : a.values()) {
    if (v > reach) return std::nullopt;
  }

  GeoSearcher search;
  search.grid = static_cast<long>(grid_denominator);
  search.cells = static_cast<long>(grid_denominator);
  search.max_components = max_components;
  search.wanted.assign(static_cast<std::size_t>(reach) + 1, 0);
  for (const Integer& v : a.values()) {
    search.wanted[v.convert_to<std::size_t>()] = 1;
  }
  search.wanted_count = a.size();

  // Shift subsets whose internal differences already stay inside A.
  const long num_shifts = 2 * shift_bound + 1;
  for (unsigned long mask = 1; mask < (1ul << num_shifts); ++mask) {
    std::vector<long> shifts;
    for (long bit = 0; bit < num_shifts; ++bit) {
      if (mask & (1ul << bit)) shifts.push_back(bit - shift_bound);
    }
    bool ok = true;
    for (std::size_t i = 0; i < shifts.size() && ok; ++i) {
      for (std::size_t j = i; j < shifts.size() && ok; ++j) {
        const long delta = (shifts[j] - shifts[i]) * search.grid;
        const long lo = ceil_div(delta - 1, search.grid);
        const long hi = floor_div(delta + 1, search.grid);
        for (long d = lo; d <= hi && ok; ++d) {
          const long ad = std::labs(d);
          if (ad != 0 && !search.wanted[ad]) ok = false;
        }
      }
    }
    if (ok) search.subset_pool.push_back(std::move(shifts));
  }

  search.dfs(0);
  return search.best;
}

}  // namespace nset
