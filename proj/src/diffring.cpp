#include "dmod/diffring.hpp"

#include <algorithm>

namespace dmod {

HomogeneousComponent minimalOperator(const NumericalSemigroup& gamma, int w) {
  const auto roots = gamma.omega(w);
  std::vector<long> rs(roots.begin(), roots.end());
  return {w, Polynomial::fromRoots(std::span<const long>(rs))};
}

DiffOperator buildPw(const NumericalSemigroup& gamma, int w) { return minimalOperator(gamma, w).toOperator(); }

namespace {

std::vector<int> generatorDegrees(const NumericalSemigroup& gamma) {
  std::set<int> degs{0};
  auto addPair = [&](int a) {
    degs.insert(a);
    degs.insert(-a);
  };
  for (int a : gamma.generators()) addPair(a);
  for (int h : gamma.gaps()) addPair(h);
  return {degs.begin(), degs.end()};
}

}  // namespace

std::vector<HomogeneousComponent> generatorComponentsOfD(const NumericalSemigroup& gamma) {
  std::vector<HomogeneousComponent> out;
  for (int w : generatorDegrees(gamma)) {
    if (w == 0)
      out.push_back({0, Polynomial::x()});
    else
      out.push_back(minimalOperator(gamma, w));
  }
  return out;
}

std::vector<DiffOperator> generatorsOfD(const NumericalSemigroup& gamma) {
  std::vector<DiffOperator> out;
  for (const auto& c : generatorComponentsOfD(gamma)) out.push_back(c.toOperator());
  return out;
}

std::vector<DiffOperator> dwBasis(const NumericalSemigroup& gamma, int w, int maxOrder) {
  std::vector<DiffOperator> out;
  const auto pw = minimalOperator(gamma, w);
  for (int s = 0; pw.order() + s <= maxOrder; ++s)
    out.push_back(HomogeneousComponent{w, pw.euler * Polynomial::monomial(s)}.toOperator());
  return out;
}

std::vector<SymbolMonomial> symbol(const DiffOperator& p, const NumericalSemigroup* strictFor) {
  if (strictFor && !isMember(p, *strictFor))
    throw PreconditionError("symbol: operator is not in D for " + strictFor->label());
  std::vector<SymbolMonomial> out;
  for (const auto& part : decompose(p)) {
    const int ord = part.order();
    out.push_back({part.degree + ord, ord, part.euler.leading()});
  }
  return out;
}

GrGeneratorCheck checkGrGenerators(const NumericalSemigroup& gamma) {
  if (gamma.isNaturals()) throw PreconditionError("gr D generator statement excludes Gamma = N0");
  GrGeneratorCheck out;
  std::set<std::pair<int, int>> candidates;
  int raw = 0;
  for (const auto& gen : generatorsOfD(gamma))
    for (const auto& m : symbol(gen, &gamma)) {
      candidates.emplace(m.tExp, m.xiExp);
      ++raw;
    }
  out.fromSymbols = pruneToMinimal(gamma, candidates);
  out.prunedCount = raw - static_cast<int>(out.fromSymbols.size());
  out.fromGammaPrime = gammaPrime(gamma).minimalGenerators;
  out.equal = out.fromSymbols == out.fromGammaPrime;
  return out;
}

bool verifyGrGenerators(const NumericalSemigroup& gamma) { return checkGrGenerators(gamma).equal; }

ActingRing::ActingRing() {
  generators_ = {{-1, Polynomial(1)}, {0, Polynomial::x()}, {1, Polynomial(1)}};
}

ActingRing::ActingRing(const NumericalSemigroup& gamma) : gamma_(gamma) {
  generators_ = generatorComponentsOfD(gamma);
}

const NumericalSemigroup& ActingRing::gamma() const {
  if (!gamma_) throw PreconditionError("Diff(T) has no underlying semigroup");
  return *gamma_;
}

HomogeneousComponent ActingRing::minimalOperator(int u) const {
  if (!gamma_) return {u, Polynomial(1)};
  return dmod::minimalOperator(*gamma_, u);
}

HomogeneousComponent ActingRing::element(int u, int s) const {
  auto p = minimalOperator(u);
  p.euler *= Polynomial::monomial(s);
  return p;
}

bool ActingRing::contains(const HomogeneousComponent& p) const {
  return !gamma_ || isMember(p, *gamma_, *gamma_);
}

std::string ActingRing::label() const { return gamma_ ? "D(" + gamma_->label() + ")" : "Diff(T)"; }

}  // namespace dmod
