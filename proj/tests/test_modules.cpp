#include "dmod/diffring.hpp"
#include "dmod/modules.hpp"
#include "dmod/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace dmod;

namespace {

const Window kSmall{-6, 6};

Rational entry(const Matrix& m) {
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  return m(0, 0);
}

const HomogeneousComponent kT{1, Polynomial(1)};
const HomogeneousComponent kD{-1, Polynomial::x()};
const HomogeneousComponent kE{0, Polynomial::x()};

}  // namespace

TEST_CASE("A over <2,3>") {
  const NumericalSemigroup g23{2, 3};
  const auto a = buildA(g23);
  CHECK(pieceDimensions(*a, {0, 6}) == std::vector<int>{1, 0, 1, 1, 1, 1, 1});
  // P_-2 t^2 = -2
  CHECK(entry(a->act(minimalOperator(g23, -2), 2)) == -2);
  CHECK(a->act(minimalOperator(g23, -2), 1).size() == 0);
}

TEST_CASE("property: A and T act as operators on Laurent monomials") {
  std::mt19937_64 rng(61);
  for (const auto& gens : std::vector<std::vector<int>>{{1}, {2, 3}, {3, 4, 5}}) {
    const NumericalSemigroup gamma(gens);
    const auto a = buildA(gamma), t = buildT(gamma);
    std::uniform_int_distribution<int> deg(-8, 8);
    for (int i = 0; i < 60; ++i) {
      auto p = minimalOperator(gamma, deg(rng));
      p.euler *= Polynomial::fromCoefficients(oracle::randomCoefficients(rng, 2, true));
      const int n = deg(rng);
      const auto image = oracle::applyToMonomial(oracle::homogeneous(p.degree, p.euler.coefficients()), n);
      const Rational expected = image.count(n + p.degree) ? image.at(n + p.degree) : Rational(0);
      CHECK(entry(t->act(p, n)) == expected);
      if (oracle::inSemigroup(gens, n) && oracle::inSemigroup(gens, n + p.degree)) CHECK(entry(a->act(p, n)) == expected);
    }
  }
}

TEST_CASE("N_alpha") {
  const auto n = buildNalpha(makeRational(1, 3));
  CHECK(entry(n->act(kT, 4)) == 1);
  CHECK(entry(n->act(kD, 4)) == makeRational(13, 3));
  CHECK(entry(n->act(kE, -2)) == makeRational(-5, 3));
  CHECK_FALSE(checkRingRelations(*n, kSmall));
}

TEST_CASE("property: N_alpha and N_beta[alpha - beta] for integer differences") {
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<int> k(-3, 3);
  for (int i = 0; i < 6; ++i) {
    const Rational alpha = oracle::randomRational(rng, 5, 4);
    const int shift = k(rng);
    const Rational beta = alpha + shift;
    CHECK(isomorphicOnWindow(*buildNalpha(alpha), *twist(buildNalpha(beta), -shift), kSmall));
  }
  CHECK_FALSE(isomorphicOnWindow(*buildNalpha(makeRational(1, 2)), *buildNalpha(makeRational(1, 3)), kSmall));
}

TEST_CASE("M_inf over N0 has basis f_j = [d^j] in degree -j") {
  const auto n0 = NumericalSemigroup::naturals();
  const auto m = buildMinfty(n0);
  CHECK(pieceDimensions(*m, {-3, 2}) == std::vector<int>{1, 1, 1, 1, 0, 0});
  for (int j = 0; j <= 5; ++j) {
    CHECK(entry(m->act(kD, -j)) == 1);
    CHECK(entry(m->act(kE, -j)) == -(j + 1));
    if (j > 0) CHECK(entry(m->act(kT, -j)) == -j);
  }
}

TEST_CASE("property: ring relations hold on every catalog model") {
  for (const auto& gens : std::vector<std::vector<int>>{{1}, {2, 3}, {3, 4, 5}}) {
    const NumericalSemigroup gamma(gens);
    const std::vector<ModulePtr> models{buildA(gamma),
                                        buildT(gamma),
                                        buildTmodA(gamma),
                                        buildMinfty(gamma),
                                        buildMalpha(gamma, makeRational(1, 2)),
                                        buildMalpha(gamma, makeRational(2, 3)),
                                        buildCyclicQuotient(gamma, {minimalOperator(gamma, -1)})};
    for (const auto& m : models) {
      const auto failure = checkRingRelations(*m, kSmall);
      CHECK_MESSAGE(!failure, gamma.label(), " ", m->tag(), ": ", failure.value_or(""));
    }
  }
}

TEST_CASE("submodules, quotients and torsion") {
  const auto n0 = NumericalSemigroup::naturals();
  const auto middle = buildCyclicQuotient(n0, {{0, Polynomial::x() + Polynomial(1)}});
  const auto sub = generatedSubmodule(middle, {{1, Vector::Ones(1)}});
  CHECK(pieceDimensions(*sub, {-2, 3}) == std::vector<int>{0, 0, 0, 1, 1, 1});
  const auto top = quotient(middle, sub);
  CHECK(pieceDimensions(*top, {-2, 3}) == std::vector<int>{1, 1, 1, 0, 0, 0});
  CHECK(isomorphicOnWindow(*top, *buildMinfty(n0), kSmall));

  CHECK(isZeroOn(*torsionSubmodule(buildA(n0), kSmall), kSmall));
  CHECK(pieceDimensions(*torsionSubmodule(buildMinfty(n0), kSmall), kSmall) == pieceDimensions(*buildMinfty(n0), kSmall));
  const auto torsion = torsionSubmodule(middle, kSmall);
  CHECK(isZeroOn(*torsion, kSmall));
}

TEST_CASE("degree-zero homomorphisms") {
  const NumericalSemigroup g23{2, 3};
  CHECK(gradedHomDegreeZero(*buildA(g23), *buildA(g23), kSmall).dim() == 1);
  CHECK(gradedHomDegreeZero(*buildA(g23), *buildT(g23), kSmall).dim() == 1);
  CHECK(gradedHomDegreeZero(*buildT(g23), *buildTmodA(g23), kSmall).dim() == 1);
  CHECK(gradedHomDegreeZero(*buildMinfty(g23), *buildA(g23), kSmall).dim() == 0);
  CHECK(gradedHomDegreeZero(*buildA(g23), *buildMinfty(g23), kSmall).dim() == 0);
  const auto iso = isomorphismOnWindow(*buildA(g23), *buildA(g23), kSmall);
  REQUIRE(iso);
  for (const auto& [d, m] : iso->pieces) CHECK(m.rows() == m.cols());
}

TEST_CASE("M_inf and (T/A)[-1]") {
  for (const auto& gens : std::vector<std::vector<int>>{{1}, {2, 3}, {3, 4, 5}}) {
    const NumericalSemigroup gamma(gens);
    CHECK(isomorphicOnWindow(*buildMinfty(gamma), *twist(buildTmodA(gamma), -1), Window{-9, 9}));
    CHECK(isSimpleCertified(*buildTmodA(gamma), Window{-12, 12}).verdict == Verdict::Yes);
  }
}

TEST_CASE("simplicity certificates") {
  const NumericalSemigroup g23{2, 3};
  const Window w{-12, 12};
  CHECK(w.inner() == Window{-8, 8});
  for (const auto& m : {buildA(g23), buildMinfty(g23), buildMalpha(g23, makeRational(1, 2))})
    CHECK(isSimpleCertified(*m, w).verdict == Verdict::Yes);
  const auto t = isSimpleCertified(*buildT(g23), w);
  CHECK(t.verdict == Verdict::No);
  CHECK(t.witness);
  const auto twoDim = isSimpleCertified(*buildCyclicQuotient(NumericalSemigroup::naturals(),
                                                             {{0, Polynomial::x() * (Polynomial::x() - Polynomial(1))}}),
                                        w);
  CHECK(twoDim.verdict == Verdict::No);
  CHECK(toString(Verdict::Inconclusive) == "inconclusive");
}

TEST_CASE("localization") {
  for (const auto& gens : std::vector<std::vector<int>>{{1}, {2, 3}}) {
    const NumericalSemigroup gamma(gens);
    for (const auto& alpha : {makeRational(0), makeRational(1, 2), makeRational(2, 3)}) {
      const auto loc = checkLocalization(gamma, alpha, kSmall);
      CHECK(loc.isomorphic);
      CHECK(loc.torsionFree);
    }
    CHECK(isZeroOn(*localize(buildMinfty(gamma)), kSmall));
  }
}

TEST_CASE("minimal polynomial") {
  Matrix a(3, 3);
  a << 2, 1, 0, 0, 2, 0, 0, 0, 3;
  const auto x = Polynomial::x();
  CHECK(minimalPolynomial(a) == (x - Polynomial(2)) * (x - Polynomial(2)) * (x - Polynomial(3)));
  CHECK(minimalPolynomial(Matrix::Identity(2, 2)) == x - Polynomial(1));
  CHECK(minimalPolynomial(Matrix(0, 0)) == Polynomial(1));
}
