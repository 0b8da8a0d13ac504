#pragma once

// Constructions inside D = Diff(k[Gamma]) viewed as a graded subring of Diff(T).

#include "dmod/operator.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dmod {

/// t^w prod_{g in Omega(w)} (E - g): the minimal-order element of D_w, as a component.
HomogeneousComponent minimalOperator(const NumericalSemigroup& gamma, int w);
DiffOperator buildPw(const NumericalSemigroup& gamma, int w);

/// E together with P_w for |w| a minimal generator or a gap, sorted by degree.
std::vector<DiffOperator> generatorsOfD(const NumericalSemigroup& gamma);
std::vector<HomogeneousComponent> generatorComponentsOfD(const NumericalSemigroup& gamma);

/// P_w E^s for sigma(w) + s <= maxOrder. Empty when maxOrder < sigma(w).
std::vector<DiffOperator> dwBasis(const NumericalSemigroup& gamma, int w, int maxOrder);

struct SymbolMonomial {
  int tExp = 0;
  int xiExp = 0;
  Rational coeff;
  friend bool operator==(const SymbolMonomial&, const SymbolMonomial&) = default;
};

/// Top-order monomial of each homogeneous component with d replaced by xi.
/// When `strictFor` is given, refuses operators outside Diff(k[Gamma]).
std::vector<SymbolMonomial> symbol(const DiffOperator& p, const NumericalSemigroup* strictFor = nullptr);

struct GrGeneratorCheck {
  bool equal = false;
  std::set<std::pair<int, int>> fromSymbols;     // symbol exponents of the generators, pruned
  std::set<std::pair<int, int>> fromGammaPrime;  // brute-force irreducibles of Gamma'
  int prunedCount = 0;                           // candidates dropped as non-minimal or duplicate
};

GrGeneratorCheck checkGrGenerators(const NumericalSemigroup& gamma);
/// Refuses Gamma = N0.
bool verifyGrGenerators(const NumericalSemigroup& gamma);

/// The acting ring of a graded module: D(Gamma), or all of Diff(T) when
/// `gamma` is empty. Supplies the minimal operator of each degree; every
/// degree-u element is that operator times a polynomial in E.
class ActingRing {
 public:
  static ActingRing differential(const NumericalSemigroup& gamma) { return ActingRing(gamma); }
  static ActingRing laurent() { return ActingRing(); }

  bool isLaurent() const { return !gamma_.has_value(); }
  const NumericalSemigroup& gamma() const;
  HomogeneousComponent minimalOperator(int u) const;
  /// Degree-u element of smallest order times E^s.
  HomogeneousComponent element(int u, int s) const;
  /// Algebra generators: generatorsOfD, or {t^-1, E, t} for Diff(T).
  const std::vector<HomogeneousComponent>& generators() const { return generators_; }
  bool contains(const HomogeneousComponent& p) const;
  std::string label() const;

  friend bool operator==(const ActingRing& a, const ActingRing& b) { return a.gamma_ == b.gamma_; }

 private:
  ActingRing();
  explicit ActingRing(const NumericalSemigroup& gamma);
  std::optional<NumericalSemigroup> gamma_;
  std::vector<HomogeneousComponent> generators_;
};

}  // namespace dmod
