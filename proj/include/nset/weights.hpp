#pragma once

#include "nset/diffset.hpp"
#include "nset/rational.hpp"

#include <optional>
#include <vector>

namespace nset {

struct ReprTerm {
  Integer element;
  int sign;             // +1 or -1
  Integer multiplicity; // >= 1

  friend bool operator==(const ReprTerm&, const ReprTerm&) = default;
};

/// A signed representation of 1 by distinct elements of A:
///   sum of sign * multiplicity * element over terms == 1.
/// Its weight is the sum of multiplicities plus the number of unused
/// elements; equivalently sum of max(|x_i|, 1) over the coefficient vector.
struct ReprOfOne {
  std::vector<ReprTerm> terms;  // ascending by element
  std::vector<Integer> unused;  // ascending
  Integer weight;

  friend bool operator==(const ReprOfOne&, const ReprOfOne&) = default;
};

inline constexpr unsigned kDefaultWeightCap = 64;

/// Minimal-weight representation of 1 by elements of A. Iterative deepening
/// on the total weight; at the first feasible weight the coefficient vector
/// that is lexicographically smallest in the per-element keys
/// (|x_1|, sign(x_1), |x_2|, sign(x_2), ...) over A sorted ascending is
/// returned, so results are deterministic. Throws NotRelativelyPrime when
/// gcd(A) != 1 and WeightCapExceeded if the cap is exhausted first.
ReprOfOne represent_one(const PositiveIntegerSet& a,
                        unsigned weight_cap = kDefaultWeightCap);

/// Weight of represent_one(A).
Integer add_weight(const PositiveIntegerSet& a,
                   unsigned weight_cap = kDefaultWeightCap);

/// Component count of the set built from A by the chain construction; an
/// upper bound for the least component count over all compact sets whose
/// positive integer differences are exactly A. Always equals add_weight(A).
Integer geo_upper(const PositiveIntegerSet& a,
                  unsigned weight_cap = kDefaultWeightCap);

/// True iff A = {1, 2, ..., n}: exactly the sets realized by a single
/// closed interval.
bool geo_is_interval(const PositiveIntegerSet& a);

/// Searches the family of unions of grid cells [j/D, (j+1)/D] shifted by
/// integers in [-B, B] (several shifted copies per cell allowed; such
/// unions always project onto the circle). Returns the least component
/// count m <= max_components realizing integer_differences == A within the
/// family, or nullopt. A nullopt proves nothing outside the family.
std::optional<std::size_t> geo_search(const PositiveIntegerSet& a,
                                      std::size_t max_components,
                                      unsigned grid_denominator,
                                      long shift_bound);

}  // namespace nset
