#include "dmod/ext.hpp"
#include "dmod/hilbert.hpp"
#include "dmod/indecomp.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace dmod;

namespace {

const Window kWindow{-12, 12};

std::vector<std::string> names(const CompositionSeries& s) {
  std::vector<std::string> out;
  for (const auto& f : s.factors) out.push_back(f.name());
  return out;
}

}  // namespace

TEST_CASE("alternating words") {
  CHECK(word(Beta::Zero, 1).text() == "d");
  CHECK(word(Beta::Zero, 2).text() == "t*d");
  CHECK(word(Beta::Infinity, 2).text() == "d*t");
  CHECK(word(Beta::Infinity, 3).text() == "t*d*t");
  CHECK(word(Beta::Infinity, 2).op() == DiffOperator::d() * DiffOperator::t());
  CHECK_THROWS(word(Beta::Zero, 0));
  CHECK(parseBeta("inf") == Beta::Infinity);
  CHECK_THROWS(parseBeta("1/2"));
}

TEST_CASE("property: words of n letters have e = n and the closed-form Hilbert function") {
  for (auto beta : {Beta::Zero, Beta::Infinity})
    for (int n = 1; n <= 5; ++n) {
      const auto m = buildIndecomposable(word(beta, n));
      CHECK(m.hilbert.d == 1);
      CHECK(m.hilbert.e == n);
      const int b = oracle::bernsteinDegree(m.generator.toOperator().terms());
      CHECK(b == n);
      for (int k = 0; k <= 20; ++k)
        CHECK(m.hilbert.profile.dims[static_cast<std::size_t>(k)] ==
              oracle::bernsteinDim({1}, k) - oracle::bernsteinDim({1}, k - b));
    }
}

TEST_CASE("composition factors of words") {
  const auto zero2 = buildIndecomposable(word(Beta::Zero, 2));
  CHECK(names(compositionSeries(zero2.model, kWindow)) == std::vector<std::string>{"M_inf[1]", "M_0[0]"});
  const auto inf2 = buildIndecomposable(word(Beta::Infinity, 2));
  const auto series = compositionSeries(inf2.model, kWindow);
  CHECK(names(series) == std::vector<std::string>{"M_0[-1]", "M_inf[0]"});
  CHECK(series.complete);
  for (auto beta : {Beta::Zero, Beta::Infinity})
    for (int n = 1; n <= 4; ++n) {
      const auto m = buildIndecomposable(word(beta, n));
      const auto up = compositionSeries(m.model, kWindow, SearchOrder::Ascending);
      const auto down = compositionSeries(m.model, kWindow, SearchOrder::Descending);
      CHECK(up.length() == n);
      CHECK(up.multiset() == down.multiset());
      for (const auto& f : up.factors) CHECK(f.identified);
    }
}

TEST_CASE("powers of E - alpha") {
  const auto m = buildPowerIndecomposable(makeRational(1, 2), 2);
  CHECK(m.hilbert.e == 4);
  const auto series = compositionSeries(m.model, kWindow);
  CHECK(names(series) == std::vector<std::string>{"M_1/2[0]", "M_1/2[0]"});
  CHECK(isIndecomposableCertified(m.model, kWindow).verdict == Verdict::Yes);
  CHECK_THROWS(buildPowerIndecomposable(makeRational(3, 2), 2));
}

TEST_CASE("property: factors of words alternate and do not depend on the search order") {
  for (auto beta : {Beta::Zero, Beta::Infinity})
    for (int n = 1; n <= 5; ++n) {
      const auto m = buildIndecomposable(word(beta, n));
      const auto up = compositionSeries(m.model, kWindow, SearchOrder::Ascending);
      const auto down = compositionSeries(m.model, kWindow, SearchOrder::Descending);
      CHECK(up.complete);
      CHECK(up.length() == n);
      CHECK(up.length() <= m.hilbert.e);
      CHECK(up.multiset() == down.multiset());
      for (std::size_t k = 1; k < up.factors.size(); ++k)
        CHECK((up.factors[k].label.kind == SimpleLabel::Kind::Zero) !=
              (up.factors[k - 1].label.kind == SimpleLabel::Kind::Zero));
    }
}

TEST_CASE("property: every factor of D / D(E - alpha)^n is a twist of M_alpha") {
  for (const auto& alpha : {makeRational(1, 2), makeRational(1, 3), makeRational(3, 4)})
    for (int n = 1; n <= 3; ++n) {
      const auto m = buildPowerIndecomposable(alpha, n);
      CHECK(m.hilbert.e == 2 * n);
      const auto series = compositionSeries(m.model, kWindow);
      CHECK(series.length() == n);
      for (const auto& f : series.factors) CHECK(f.label == SimpleLabel::of(alpha));
    }
}

TEST_CASE("indecomposability certificates") {
  const auto n0 = NumericalSemigroup::naturals();
  const auto dt = buildIndecomposable(word(Beta::Infinity, 2));
  const auto yes = isIndecomposableCertified(dt.model, kWindow);
  CHECK(yes.verdict == Verdict::Yes);
  CHECK(yes.semisimpleDim == 1);

  const auto aa = directSum(buildA(n0), buildA(n0));
  const auto no = isIndecomposableCertified(aa, kWindow);
  CHECK(no.verdict == Verdict::No);
  REQUIRE(no.idempotent);
  // e^2 = e and e is neither 0 nor 1
  const auto& e = *no.idempotent;
  const auto e2 = compose(e, e);
  bool trivial = true;
  for (const auto& [d, m] : e.pieces) {
    CHECK(e2.pieces.at(d) == m);
    if (!m.isZero() && m != Matrix::Identity(m.rows(), m.cols())) trivial = false;
  }
  CHECK_FALSE(trivial);

  const auto mixed = directSum(buildA(n0), buildMinfty(n0));
  CHECK(isIndecomposableCertified(mixed, kWindow).verdict == Verdict::No);
}
