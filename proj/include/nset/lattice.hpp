#pragma once

#include "nset/box_set.hpp"
#include "nset/lattice_set.hpp"

#include <optional>

namespace nset {

/// All lattice vectors v with K meeting (v + K): the integer points of the
/// pairwise per-axis difference ranges. Always symmetric and containing 0.
LatticeSet box_differences(const BoxSet& k);

/// True iff the integer span of the vectors is the whole lattice, decided
/// by exact integer column reduction to triangular form with all pivots
/// +-1. Throws EmptySet.
bool generates(const LatticeSet& s);

/// Checks the translation bound: with r = (smallest integer at least the
/// largest corner norm) + 1, so that |x| < r on K, every difference vector
/// v satisfies |v| < 2r. Exact via squared norms.
bool proper_bound_check(const BoxSet& k);

/// For a box set covering the torus, checks that its difference vectors
/// generate the lattice. Throws NotAnNSet when the coverage precondition
/// fails.
bool difference_generates(const BoxSet& k);

/// Backtracking search for a 2D witness: assigns one integer shift in
/// [-B, B]^2 to each of the D^2 torus cells (such unions always cover the
/// torus) and returns the first assignment, in row-major cell order with
/// shifts ordered by |v|_1 then lexicographically, whose difference set
/// equals `target`. nullopt means no witness in this family; it never
/// refutes existence. The target must be symmetric, contain 0 and generate
/// the lattice (InvalidTarget otherwise).
std::optional<BoxSet> explore2d(const LatticeSet& target,
                                unsigned grid_denominator, long shift_bound);

}  // namespace nset
