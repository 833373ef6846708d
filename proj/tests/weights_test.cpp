#include "nset/weights.hpp"

#include "nset/construct.hpp"
#include "nset/error.hpp"

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace nset;
using fixtures::ints;

namespace {

std::vector<long> coefficients(const PositiveIntegerSet& a,
                               const ReprOfOne& repr) {
  std::vector<long> x(a.size(), 0);
  for (const ReprTerm& term : repr.terms) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.values()[i] == term.element) {
        x[i] = term.sign * term.multiplicity.convert_to<long>();
      }
    }
  }
  return x;
}

void check_repr_invariants(const PositiveIntegerSet& a,
                           const ReprOfOne& repr) {
  REQUIRE(!repr.terms.empty());
  Integer sum = 0;
  Integer weight = 0;
  for (const ReprTerm& term : repr.terms) {
    CHECK(term.multiplicity >= 1);
    CHECK((term.sign == 1 || term.sign == -1));
    CHECK(a.contains(term.element));
    sum += Integer(term.sign) * term.multiplicity * term.element;
    weight += term.multiplicity;
  }
  weight += Integer(repr.unused.size());
  CHECK(sum == 1);
  CHECK(weight == repr.weight);
  CHECK(repr.terms.size() + repr.unused.size() == a.size());
}

}  // namespace

TEST_CASE("represent_one base cases") {
  auto one = represent_one(ints({1}));
  CHECK(one.weight == 1);
  CHECK(coefficients(ints({1}), one) == std::vector<long>{1});

  auto two_five = represent_one(ints({2, 5}));
  CHECK(two_five.weight == 3);
  CHECK(coefficients(ints({2, 5}), two_five) == std::vector<long>{-2, 1});

  auto triple = represent_one(ints({6, 10, 15}));
  CHECK(triple.weight == 3);
  CHECK(coefficients(ints({6, 10, 15}), triple) ==
        std::vector<long>{1, 1, -1});

  auto larger = represent_one(ints({18, 28, 63}));
  CHECK(larger.weight == 4);
  CHECK(coefficients(ints({18, 28, 63}), larger) ==
        std::vector<long>{2, 1, -1});
}

TEST_CASE("represent_one minimality against exhaustive enumeration") {
  auto confirm = [](std::initializer_list<long> values, long expect) {
    auto a = ints(values);
    CHECK(add_weight(a) == expect);
    auto brute = oracles::brute_min_weight(a.values(), expect);
    REQUIRE(brute.has_value());
    CHECK(*brute == expect);
    if (expect > static_cast<long>(a.size())) {
      auto below = oracles::brute_min_weight(a.values(), expect - 1);
      CHECK(!below.has_value());
    }
  };
  confirm({2, 5}, 3);
  confirm({6, 10, 15}, 3);
  confirm({18, 28, 63}, 4);
}

TEST_CASE("represent_one matches the oracle on random inputs") {
  oracles::Rng rng(711);
  for (int round = 0; round < 40; ++round) {
    auto a = oracles::random_coprime_set(rng, 3, 12);
    auto repr = represent_one(a);
    check_repr_invariants(a, repr);
    auto brute = oracles::brute_min_weight(a.values(), 14);
    REQUIRE(brute.has_value());
    CHECK(Integer(*brute) == repr.weight);
  }
}

TEST_CASE("represent_one is deterministic") {
  auto a = ints({4, 6, 9, 11});
  CHECK(represent_one(a) == represent_one(a));
}

TEST_CASE("represent_one validates input and cap") {
  CHECK(oracles::thrown_kind([] { represent_one(ints({2, 4})); }) ==
        ErrorKind::NotRelativelyPrime);
  CHECK(oracles::thrown_kind([] {
          represent_one(PositiveIntegerSet::make({}));
        }) == ErrorKind::EmptySet);
  CHECK(oracles::thrown_kind([] { represent_one(ints({2, 49}), 8); }) ==
        ErrorKind::WeightCapExceeded);
}

TEST_CASE("add_weight of 1..n is n") {
  std::vector<Integer> values;
  for (long n = 1; n <= 8; ++n) {
    values.emplace_back(n);
    CHECK(add_weight(PositiveIntegerSet::make(values)) == n);
  }
}

TEST_CASE("add_weight is at least the size, equal iff a signed sum hits 1") {
  oracles::Rng rng(712);
  for (int round = 0; round < 40; ++round) {
    auto a = oracles::random_coprime_set(rng, 3, 12);
    const Integer add = add_weight(a);
    CHECK(add >= Integer(a.size()));
    CHECK((add == Integer(a.size())) ==
          oracles::has_signed_unit_sum(a.values()));
  }
}

TEST_CASE("geo_upper equals the component count of the built set") {
  CHECK(geo_upper(ints({2, 5})) == 3);
  CHECK(geo_upper(ints({1})) == 1);
  CHECK(geo_upper(ints({1, 2, 3})) == 3);

  oracles::Rng rng(713);
  for (int round = 0; round < 40; ++round) {
    auto a = oracles::random_coprime_set(rng, 4, 30);
    CHECK(geo_upper(a) == add_weight(a));
    CHECK(Integer(components(build_nset(a).set)) == geo_upper(a));
  }
}

TEST_CASE("geo_is_interval characterizes initial segments") {
  CHECK(geo_is_interval(ints({1})));
  CHECK(geo_is_interval(ints({1, 2, 3})));
  CHECK(!geo_is_interval(ints({2, 5})));
  CHECK(!geo_is_interval(ints({1, 3})));

  // Exhaustive over subsets of {1..8}.
  for (unsigned mask = 1; mask < (1u << 8); ++mask) {
    std::vector<Integer> values;
    for (unsigned bit = 0; bit < 8; ++bit) {
      if (mask & (1u << bit)) values.emplace_back(bit + 1);
    }
    auto a = PositiveIntegerSet::make(values);
    const bool initial_segment =
        a.values().front() == 1 && a.values().back() == Integer(a.size());
    CHECK(geo_is_interval(a) == initial_segment);
  }
}

TEST_CASE("geo_search finds single intervals") {
  CHECK(geo_search(ints({1, 2, 3, 4, 5}), 1, 1, 5) == std::size_t{1});
  CHECK(geo_search(ints({1}), 1, 1, 1) == std::size_t{1});
}

TEST_CASE("geo_search cannot split {2,5} across two components") {
  // Two closed intervals covering the circle have combined length >= 1, so
  // one cross-difference range would have to contain both 2 and 5.
  CHECK(geo_search(ints({2, 5}), 2, 6, 8) == std::nullopt);
}

TEST_CASE("geo_search agrees with geo_is_interval on the single-cell family") {
  for (unsigned mask = 1; mask < (1u << 6); ++mask) {
    std::vector<Integer> values;
    for (unsigned bit = 0; bit < 6; ++bit) {
      if (mask & (1u << bit)) values.emplace_back(bit + 1);
    }
    auto a = PositiveIntegerSet::make(values);
    if (gcd_of(a) != 1) continue;
    auto found = geo_search(a, 1, 1, 8);
    CHECK(found.has_value() == geo_is_interval(a));
  }
}

TEST_CASE("geo_search results never beat the construction bound") {
  oracles::Rng rng(714);
  for (int round = 0; round < 60; ++round) {
    auto a = oracles::random_coprime_set(rng, 3, 9);
    auto found = geo_search(a, 4, 2, 3);
    if (found.has_value()) {
      CHECK(Integer(*found) <= geo_upper(a));
    }
  }
}

TEST_CASE("geo_search agrees with direct family enumeration") {
  // Grid 2, shifts in [-2,2]: build every assignment of nonempty shift
  // subsets to the two cells through the exact interval path and take the
  // best component count realizing A.
  const long bound = 2;
  const unsigned width = 2 * bound + 1;
  auto brute = [&](const PositiveIntegerSet& a) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (unsigned m0 = 1; m0 < (1u << width); ++m0) {
      for (unsigned m1 = 1; m1 < (1u << width); ++m1) {
        std::vector<Interval> raw;
        for (int cell = 0; cell < 2; ++cell) {
          const unsigned mask = cell == 0 ? m0 : m1;
          for (unsigned bit = 0; bit < width; ++bit) {
            if (!(mask & (1u << bit))) continue;
            Rational s(static_cast<long>(bit) - bound);
            raw.push_back({s + make_rational(cell, 2),
                           s + make_rational(cell + 1, 2)});
          }
        }
        auto k = IntervalSet::canonicalize(raw);
        if (integer_differences(k) == a) {
          const std::size_t c = components(k);
          if (!best || c < *best) best = c;
        }
      }
    }
    return best;
  };

  for (auto a : {ints({1}), ints({1, 2}), ints({2, 3}), ints({1, 3}),
                 ints({1, 2, 3}), ints({2, 5}), ints({3, 4, 5})}) {
    CAPTURE(a.values().front());
    CHECK(geo_search(a, 10, 2, bound) == brute(a));
  }
}

TEST_CASE("represent_one handles adversarial two-element sets") {
  // Consecutive Fibonacci numbers maximize the minimal weight.
  CHECK(add_weight(ints({21, 34})) == 21);
  auto brute = oracles::brute_min_weight({Integer(21), Integer(34)}, 21);
  REQUIRE(brute.has_value());
  CHECK(*brute == 21);
  CHECK(!oracles::brute_min_weight({Integer(21), Integer(34)}, 20)
             .has_value());

  CHECK(add_weight(ints({2, 49})) == 25);
  CHECK(add_weight(ints({47, 49})) == 47);

  // Four-digit elements stay quick: 10000 - 3*3333 = 1.
  auto big = represent_one(ints({3333, 10000}));
  CHECK(big.weight == 4);
  CHECK(coefficients(ints({3333, 10000}), big) == std::vector<long>{-3, 1});
}

TEST_CASE("geo_search validates parameters") {
  CHECK(oracles::thrown_kind([] { geo_search(ints({1}), 0, 1, 1); }) ==
        ErrorKind::InvalidParams);
  CHECK(oracles::thrown_kind([] { geo_search(ints({1}), 1, 0, 1); }) ==
        ErrorKind::InvalidParams);
  CHECK(oracles::thrown_kind([] { geo_search(ints({1}), 1, 1, 0); }) ==
        ErrorKind::InvalidParams);
  CHECK(oracles::thrown_kind([] { geo_search(ints({1}), 1, 1, 11); }) ==
        ErrorKind::InvalidParams);
  CHECK(oracles::thrown_kind([] { geo_search(ints({2, 4}), 1, 1, 1); }) ==
        ErrorKind::NotRelativelyPrime);
}

TEST_CASE("geo_search ignores unreachable targets quickly") {
  CHECK(geo_search(ints({1, 50}), 4, 2, 3) == std::nullopt);
}
