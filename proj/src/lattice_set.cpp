#include "nset/lattice_set.hpp"

#include "nset/error.hpp"

#include <algorithm>

namespace nset {

LatticeSet LatticeSet::make(std::size_t dimension,
                            const std::vector<LatticeVector>& raw) {
  if (dimension < 1) {
    throw Error(ErrorKind::DimensionMismatch, "dimension must be >= 1");
  }
  for (const LatticeVector& v : raw) {
    if (v.size() != dimension) {
      throw Error(ErrorKind::DimensionMismatch,
                  "vector has " + std::to_string(v.size()) +
                      " coordinates, expected " + std::to_string(dimension));
    }
  }
  std::vector<LatticeVector> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  LatticeSet out;
  out.dimension_ = dimension;
  out.vectors_ = std::move(sorted);
  return out;
}

bool LatticeSet::contains(const LatticeVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

}  // namespace nset
