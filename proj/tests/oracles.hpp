#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's semigroup, operator or module code; inputs are raw generator
// lists and raw (t-power, d-power) -> coefficient maps.

#include "dmod/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using dmod::Rational;
using Terms = std::map<std::pair<int, int>, Rational>;  // (i, j) -> c for c t^i d^j

/// member[n] for 0 <= n <= upto, by the coin-change recursion.
std::vector<bool> members(const std::vector<int>& gens, int upto);
bool inSemigroup(const std::vector<int>& gens, long n);
/// Largest gap by scanning, -1 when there is none.
int frobenius(const std::vector<int>& gens);
/// #{g in Gamma : g + w not in Gamma}
int sigma(const std::vector<int>& gens, int w);

/// Gap points of {(m, n) : n >= sigma(m - n)} inside [0, bound]^2.
std::set<std::pair<int, int>> gammaPrimeGaps(const std::vector<int>& gens, int bound);
/// Irreducible elements of Gamma' in [0, bound]^2, by subtracting every smaller element.
std::set<std::pair<int, int>> gammaPrimeIrreducibles(const std::vector<int>& gens, int bound);

/// E^k = sum_j S(k, j) t^j d^j, Stirling numbers of the second kind.
Terms eulerPower(int k);
/// t^w f(E) in normal form, f given by low-first coefficients.
Terms homogeneous(int w, const std::vector<Rational>& f);
Terms add(const Terms& a, const Terms& b);
/// Product through d^j t^k = sum_l C(j, l) k(k-1)...(k-l+1) t^(k-l) d^(j-l).
Terms multiply(const Terms& a, const Terms& b);
/// The operator applied to t^n, as a map exponent -> coefficient.
std::map<int, Rational> applyToMonomial(const Terms& p, int n);
/// P(t^g) in k[Gamma] for every g in Gamma up to a bound that suffices.
bool preservesSemigroupRing(const Terms& p, const std::vector<int>& gens);
/// max i + j over the terms; INT_MIN for the zero operator.
int bernsteinDegree(const Terms& p);

/// dim of {P in D : Bernstein degree <= n}, by per-degree linear algebra over
/// {f : deg f <= (n - w) / 2, f(g) = 0 for g in Gamma with g + w outside}.
long bernsteinDim(const std::vector<int>& gens, int n);

/// dim (B^n cap sum_i B^(n + extra - b_i) g_i) by stacking every product into one
/// matrix; a lower bound for dim (B^n cap I) that is exact once extra is large enough.
long idealLayerDim(const std::vector<int>& gens, const std::vector<Terms>& generators, int n, int extra);

/// Coefficients 0..count-1 of num(t) / prod_i (1 - t^{den_i}).
std::vector<long> seriesCoefficients(const std::vector<long>& num, const std::vector<int>& den, int count);

/// dim ker and dim coker in degree d of the scalar (shift + d - beta) on a
/// module with one-dimensional pieces on `support`: the resolution by E - beta.
struct ScalarExt {
  long hom = 0;
  long ext1 = 0;
};
ScalarExt scalarExt(bool inSupport, const Rational& shift, int d, const Rational& beta);

/// Small random rationals and polynomials for property tests.
Rational randomRational(std::mt19937_64& rng, int numBound = 6, int denBound = 4);
std::vector<Rational> randomCoefficients(std::mt19937_64& rng, int maxDegree, bool nonzero);

}  // namespace oracle
