#pragma once

// The acceptance checks, shared by `dmod-curve verify` and the test suite.

#include "dmod/modules.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dmod {

struct VerifyConfig {
  std::vector<int> generators{2, 3};
  Window window{-12, 12};
  int nMax = 60;
  std::vector<Rational> alphas{makeRational(1, 2), makeRational(1, 3), makeRational(2, 3)};
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double budgetSeconds = 0;
  std::string detail;
  std::vector<std::string> failures;
};

constexpr int kCriterionCount = 9;

CriterionResult runCriterion(int id, const VerifyConfig& config);
std::vector<CriterionResult> runCriteria(const VerifyConfig& config);

/// Random homogeneous t^degree f(E) with degree in [-maxDegree, maxDegree],
/// deg f <= maxOrder and small rational coefficients; nonzero when requested.
HomogeneousComponent randomComponent(std::mt19937_64& rng, int maxDegree, int maxOrder, bool nonzero);
/// A random element of D: a short sum of P_w E^s with small coefficients, nonzero.
DiffOperator randomElementOfD(std::mt19937_64& rng, const NumericalSemigroup& gamma, int maxDegree, int maxExtraOrder);

}  // namespace dmod
