#pragma once

#include "nset/diffset.hpp"
#include "nset/interval_set.hpp"
#include "nset/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fixtures {

inline nset::Rational rat(const std::string& text) {
  return nset::parse_rational(text);
}

inline nset::IntervalSet make_set(
    std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<nset::Interval> raw;
  for (const auto& [lo, hi] : pairs) {
    raw.push_back({rat(lo), rat(hi)});
  }
  return nset::IntervalSet::canonicalize(raw);
}

inline nset::PositiveIntegerSet ints(std::initializer_list<long> values) {
  std::vector<nset::Integer> raw;
  for (long v : values) raw.emplace_back(v);
  return nset::PositiveIntegerSet::make(raw);
}

// Three-component set with differences {2, 5}.
inline nset::IntervalSet k1() {
  return make_set({{"0", "1/3"}, {"7/3", "8/3"}, {"14/3", "5"}});
}

// Three-component set with differences {6, 10, 15}.
inline nset::IntervalSet k2() {
  return make_set({{"0", "1/3"}, {"46/3", "47/3"}, {"29/3", "10"}});
}

// Thirteen-block chain with differences {18, 28, 63}: ten blocks stepping
// by -18, two more at -99 and -36, and a final block at 27.
inline std::vector<nset::Interval> k3_raw() {
  using nset::Rational;
  std::vector<nset::Interval> raw;
  std::vector<long> shifts;
  for (long i = 0; i <= 9; ++i) shifts.push_back(-18 * i);
  shifts.push_back(-99);
  shifts.push_back(-36);
  shifts.push_back(27);
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    Rational lo = Rational(shifts[k]) + nset::make_rational(k, 13);
    Rational hi = Rational(shifts[k]) + nset::make_rational(k + 1, 13);
    raw.push_back({lo, hi});
  }
  return raw;
}

inline nset::IntervalSet k3() {
  return nset::IntervalSet::canonicalize(k3_raw());
}

}  // namespace fixtures
