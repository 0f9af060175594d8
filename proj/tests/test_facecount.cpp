#include <doctest.h>

#include <random>

#include "downsets/duality.hpp"
#include "downsets/errors.hpp"
#include "downsets/facecount.hpp"
#include "downsets/inclusion_exclusion.hpp"
#include "oracles.hpp"

using namespace downsets;
using downsets::testing::antichain;

namespace {

FaceCountVector fcv(std::size_t n, std::vector<long long> values) {
  std::vector<BigInt> counts(values.begin(), values.end());
  return FaceCountVector(n, std::move(counts));
}

IntPolynomial poly(std::vector<long long> values) {
  return IntPolynomial(std::vector<BigInt>(values.begin(), values.end()));
}

const Antichain kExampleFacets = antichain(4, {{1, 2}, {2, 3, 4}});
const Antichain kExampleBlockers = antichain(4, {{1, 3}, {1, 4}});

}  // namespace

TEST_CASE("face counts of the worked example by every route") {
  const auto expected = fcv(4, {1, 4, 4, 1, 0});
  CHECK(counts_bruteforce(kExampleFacets) == expected);
  CHECK(counts_from_facets(kExampleFacets) == expected);
  CHECK(counts_from_blockers(kExampleBlockers) == expected);
}

TEST_CASE("face counts of extreme complexes") {
  CHECK(counts_bruteforce(antichain(4, {{1, 2, 3, 4}})) == fcv(4, {1, 4, 6, 4, 1}));
  CHECK(counts_bruteforce(antichain(4, {{}})) == fcv(4, {1, 0, 0, 0, 0}));
  CHECK(counts_from_facets(antichain(4, {{1, 2, 3, 4}})) == fcv(4, {1, 4, 6, 4, 1}));
  CHECK(counts_from_facets(Antichain(4)) == fcv(4, {0, 0, 0, 0, 0}));
  CHECK(counts_from_blockers(Antichain(4)) == fcv(4, {1, 4, 6, 4, 1}));
  CHECK(counts_from_blockers(antichain(4, {{1}, {2}, {3}, {4}})) == fcv(4, {1, 0, 0, 0, 0}));
  CHECK(counts_from_blockers(antichain(4, {{}})) == fcv(4, {0, 0, 0, 0, 0}));
}

TEST_CASE("n = 0 ground set") {
  CHECK(counts_from_facets(antichain(0, {{}})) == fcv(0, {1}));
  CHECK(counts_from_facets(Antichain(0)) == fcv(0, {0}));
  CHECK(counts_from_blockers(Antichain(0)) == fcv(0, {1}));
  CHECK(counts_from_blockers(antichain(0, {{}})) == fcv(0, {0}));
  CHECK(euler_from_facets(antichain(0, {{}})) == 1);
  CHECK(euler_from_blockers(Antichain(0)) == 1);
  CHECK(euler_from_facets(Antichain(0)) == 0);
  CHECK(euler_from_blockers(antichain(0, {{}})) == 0);
  CHECK(hilbert_dimension(Antichain(0), 0) == 1);
  CHECK(hilbert_dimension(Antichain(0), 3) == 0);
}

TEST_CASE("large ground sets stay exact") {
  const std::size_t n = 1024;
  const auto full = Antichain::checked(SetFamily(n, {Face::full(n)}));
  const auto counts = counts_from_facets(full);
  CHECK(counts.counts() == binomial_row(n));
  CHECK(counts[512] == binomial(1024, 512));
  CHECK(k_polynomial_from_counts(counts) == IntPolynomial::constant(1));
  CHECK(counts_from_blockers(Antichain(n)) == counts);
  CHECK(counts.satisfies_invariants());
}

TEST_CASE("f-polynomial") {
  CHECK(f_polynomial(fcv(4, {1, 4, 4, 1, 0})) == poly({1, 4, 4, 1}));
  CHECK(f_polynomial(fcv(4, {1, 4, 4, 1, 0})).to_string() == "1+4t+4t^2+t^3");
  CHECK(f_polynomial(fcv(3, {1, 0, 0, 0})) == poly({1}));
  CHECK(f_polynomial(fcv(2, {1, 2, 1})) == IntPolynomial::binomial_power(1, 1, 2));
}

TEST_CASE("K-polynomial from counts and from blockers") {
  CHECK(k_polynomial_from_counts(fcv(4, {1, 4, 4, 1, 0})) == poly({1, 0, -2, 1}));
  CHECK(k_polynomial_from_blockers(kExampleBlockers) == poly({1, 0, -2, 1}));
  CHECK(k_polynomial_from_blockers(kExampleBlockers).to_string() == "1-2t^2+t^3");
  CHECK(k_polynomial_from_counts(fcv(3, {1, 3, 3, 1})) == poly({1}));
  CHECK(k_polynomial_from_counts(fcv(3, {0, 0, 0, 0})).is_zero());
  CHECK(k_polynomial_from_blockers(Antichain(5)) == poly({1}));
  CHECK(k_polynomial_from_blockers(antichain(5, {{}})).is_zero());
}

TEST_CASE("Hilbert-function values") {
  CHECK(hilbert_dimension(kExampleBlockers, 2) == 8);
  CHECK(hilbert_dimension(kExampleBlockers, 3) == 13);
  CHECK(testing::brute_hilbert(kExampleBlockers, 2) == 8);
  CHECK(testing::brute_hilbert(kExampleBlockers, 3) == 13);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t d = 0; d <= 6; ++d) {
      CHECK(hilbert_dimension(Antichain(n), d) ==
            binomial(static_cast<long long>(d + n - 1), static_cast<long long>(n - 1)));
    }
  }
}

TEST_CASE("Hilbert values match monomial counting") {
  std::mt19937_64 rng(8);
  for (std::size_t n = 0; n <= 8; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto blockers = min_antichain(testing::random_antichain(rng, n, 4, 0.35).family());
      for (std::size_t d = 0; d <= 6; ++d) {
        CHECK(hilbert_dimension(blockers, d) == testing::brute_hilbert(blockers, d));
      }
    }
  }
}

TEST_CASE("reduced Euler characteristic") {
  CHECK(euler_bruteforce(fcv(4, {1, 4, 4, 1, 0})) == 0);
  CHECK(euler_bruteforce(fcv(3, {1, 3, 3, 1})) == 0);
  CHECK(euler_bruteforce(fcv(3, {1, 3, 3, 0})) == 1);

  CHECK(euler_from_blockers(kExampleBlockers) == 0);
  CHECK(euler_from_blockers(antichain(3, {{1, 2, 3}})) == 1);
  CHECK(euler_from_blockers(Antichain(3)) == 0);

  CHECK(euler_from_facets(kExampleFacets) == 0);
  CHECK(euler_from_facets(antichain(3, {{1, 2, 3}})) == 0);
  CHECK(euler_from_facets(Antichain(3)) == 0);
  CHECK(euler_from_facets(antichain(3, {{1, 2}, {1, 3}, {2, 3}})) == 1);
}

TEST_CASE("three routes agree on random facet families") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const auto facets = testing::random_facets(rng, 12, 12);
    const auto blockers = testing::brute_blockers(facets);
    const auto brute = counts_bruteforce(facets);
    CHECK(brute.satisfies_invariants());
    CHECK(counts_from_facets(facets) == brute);
    CHECK(counts_from_blockers(blockers) == brute);
    CHECK(brute.counts() == testing::brute_counts_from_blockers(blockers));
    CHECK(k_polynomial_from_counts(brute) == k_polynomial_from_blockers(blockers));
    const auto chi = euler_bruteforce(brute);
    CHECK(euler_from_facets(facets) == chi);
    CHECK(euler_from_blockers(blockers) == chi);
    const auto k = k_polynomial_from_counts(brute);
    CHECK(k.evaluate(BigInt(0)) == brute[0]);
    CHECK(f_polynomial(brute).evaluate(BigInt(1)) == brute.total());
  }
}

TEST_CASE("aggregated and threaded enumeration agree with the direct sum") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto facets = testing::random_antichain(rng, 8, 14, 0.6);
    for (auto fold : {SubsetFold::kIntersection, SubsetFold::kUnion}) {
      const auto direct = alternating_size_histogram(facets.family(), fold);
      Limits aggregate;
      aggregate.term_cap = (std::size_t{1} << facets.size()) - 1;
      if (aggregate.term_cap < 300) aggregate.term_cap = 300;
      Limits threaded;
      threaded.threads = 3;
      CHECK(alternating_size_histogram(facets.family(), fold, threaded) == direct);
      if ((std::size_t{1} << facets.size()) > aggregate.term_cap) {
        CHECK(alternating_size_histogram(facets.family(), fold, aggregate) == direct);
      }
    }
  }
}

TEST_CASE("families beyond the direct threshold are aggregated") {
  // Facets C + {i} for i = 1..24 with core C = {25, ..., 30}: too many sets
  // for direct enumeration, but every intersection of two or more is C.
  const std::size_t n = 30;
  SetFamily family(n);
  for (std::size_t i = 1; i <= 24; ++i) {
    auto f = Face::full(n);
    for (std::size_t j = 1; j <= 24; ++j) {
      if (j != i) f.erase(j);
    }
    family.push_back(f);
  }
  const auto facets = Antichain::checked(family);
  const auto counts = counts_from_facets(facets);
  for (std::size_t l = 0; l <= n; ++l) {
    const auto ll = static_cast<long long>(l);
    CHECK(counts[l] == binomial(6, ll) + 24 * binomial(6, ll - 1));
  }
  CHECK(euler_from_facets(facets) == euler_bruteforce(counts));
  CHECK(blockers_from_facets(facets).size() == 24 * 23 / 2);
}

TEST_CASE("term budget") {
  std::mt19937_64 rng(1);
  const auto facets = testing::random_antichain(rng, 40, 30, 0.5);
  REQUIRE(facets.size() > kDirectEnumerationMaxSets);
  Limits tight;
  tight.term_cap = 64;
  CHECK_THROWS_AS(counts_from_facets(facets, tight), TermBudgetExceeded);
  CHECK_THROWS_AS(k_polynomial_from_blockers(facets, tight), TermBudgetExceeded);
}

TEST_CASE("FaceCountVector invariants") {
  CHECK(fcv(4, {1, 4, 4, 1, 0}).satisfies_invariants());
  CHECK_FALSE(fcv(4, {1, 4, 7, 1, 0}).satisfies_invariants());
  CHECK_FALSE(fcv(4, {1, 0, 1, 0, 0}).satisfies_invariants());
  CHECK_FALSE(fcv(2, {1, -1, 0}).satisfies_invariants());
  CHECK(fcv(4, {1, 4, 4, 1, 0}).evaluate(Dyadic(1), Dyadic(1)) == Dyadic(10));
  CHECK_THROWS_AS(FaceCountVector(3, {1, 2}), DomainError);
}
