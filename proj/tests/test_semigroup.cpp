#include "dmod/parse.hpp"
#include "dmod/semigroup.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace dmod;

namespace {

std::vector<int> randomGenerators(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 4), value(2, 11);
  for (;;) {
    std::vector<int> g;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) g.push_back(value(rng));
    int d = 0;
    for (int v : g) d = std::gcd(d, v);
    if (d == 1) return g;
  }
}

}  // namespace

TEST_CASE("<2,3> and <3,4,5> by hand") {
  const NumericalSemigroup g23{2, 3};
  CHECK(g23.gaps() == std::vector<int>{1});
  CHECK(g23.frobenius() == 1);
  CHECK(g23.omega(-2) == std::vector<int>{0, 3});
  CHECK(g23.sigma(1) == 1);
  CHECK(g23.label() == "<2,3>");
  const NumericalSemigroup g345{5, 3, 4, 6};
  CHECK(g345.generators() == std::vector<int>{3, 4, 5});
  CHECK(g345.gaps() == std::vector<int>{1, 2});
  const NumericalSemigroup n0{1};
  CHECK(n0.isNaturals());
  CHECK(n0 == NumericalSemigroup::naturals());
  CHECK(n0.frobenius() == -1);
}

TEST_CASE("bad generators are refused") {
  CHECK_THROWS_WITH_AS(NumericalSemigroup({4, 6}), "gcd must be 1 (got 2)", PreconditionError);
  CHECK_THROWS_AS(NumericalSemigroup({0, 1}), PreconditionError);
  CHECK_THROWS_AS(NumericalSemigroup(std::span<const int>()), PreconditionError);
  CHECK_THROWS_AS(parseIntList("2,x"), std::invalid_argument);
}

TEST_CASE("property: membership, gaps and sigma against brute force") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const auto gens = randomGenerators(rng);
    const NumericalSemigroup gamma(gens);
    CHECK(gamma.frobenius() == oracle::frobenius(gens));
    for (int n = -3; n <= gamma.frobenius() + 10; ++n) CHECK(gamma.contains(n) == oracle::inSemigroup(gens, n));
    for (int w = -15; w <= 15; ++w) {
      CHECK(gamma.sigma(w) == oracle::sigma(gens, w));
      CHECK(gamma.sigma(-w) == gamma.sigma(w) + w);
    }
  }
}

TEST_CASE("property: Gamma' gap points against brute force") {
  for (const auto& gens : std::vector<std::vector<int>>{{2, 3}, {2, 5}, {3, 4, 5}, {3, 5}, {4, 5, 7}}) {
    const NumericalSemigroup gamma(gens);
    const int bound = gammaPrimeRequiredBound(gamma);
    const auto data = gammaPrime(gamma, bound + 2);
    CHECK(data.gapPoints == oracle::gammaPrimeGaps(gens, bound + 6));
    CHECK(data.s == static_cast<int>(data.gapPoints.size()));
    CHECK(data.minimalGenerators == oracle::gammaPrimeIrreducibles(gens, bound + 6));
    for (const auto& [m, n] : data.gapPoints) CHECK_FALSE(inGammaPrime(gamma, m, n));
  }
  CHECK(gammaPrime(NumericalSemigroup{2, 3}).s == 2);
  CHECK_THROWS_AS(gammaPrime(NumericalSemigroup{3, 4, 5}, 1), PreconditionError);
  CHECK_THROWS_AS(gammaPrime(NumericalSemigroup::naturals(), 4, true), PreconditionError);
}
