#pragma once

#include "nset/rational.hpp"

#include <vector>

namespace nset {

using LatticeVector = std::vector<Integer>;

/// Finite set of integer n-vectors, lexicographically sorted and distinct.
class LatticeSet {
 public:
  static LatticeSet make(std::size_t dimension,
                         const std::vector<LatticeVector>& raw);

  std::size_t dimension() const { return dimension_; }
  const std::vector<LatticeVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }

  bool contains(const LatticeVector& v) const;

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  LatticeSet() = default;
  std::size_t dimension_ = 0;
  std::vector<LatticeVector> vectors_;
};

}  // namespace nset
