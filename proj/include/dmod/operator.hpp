#pragma once

// Exact arithmetic in Diff(T) = Q[t, t^-1]<d>, [d, t] = 1.

#include "dmod/polynomial.hpp"
#include "dmod/semigroup.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dmod {

/// Operator sum c_ij t^i d^j in normal form (all d to the right), i in Z, j >= 0.
class DiffOperator {
 public:
  using Exponents = std::pair<int, int>;  // (power of t, power of d)

  DiffOperator() = default;
  DiffOperator(const Rational& constant);  // NOLINT
  DiffOperator(long constant) : DiffOperator(Rational(constant)) {}  // NOLINT

  static DiffOperator term(int tPower, int dPower, const Rational& coeff = 1);
  static DiffOperator t(int power = 1) { return term(power, 0); }
  static DiffOperator d(int power = 1) { return term(0, power); }
  /// E = t d
  static DiffOperator euler() { return term(1, 1); }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Rational coefficient(int tPower, int dPower) const;

  /// Largest power of d; -1 for the zero operator.
  int order() const;
  /// The common degree i - j of all terms, if there is one.
  std::optional<int> degree() const;
  bool isHomogeneous() const { return isZero() || degree().has_value(); }
  /// Bernstein degree: max i + j over the terms (= 2 order + degree per
  /// homogeneous component). Throws std::domain_error for the zero operator.
  int bernsteinDegree() const;

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator-(const DiffOperator& a);
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator*(const Rational& c, const DiffOperator& a);
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.terms_ == b.terms_; }

  void addTerm(int tPower, int dPower, const Rational& coeff);

 private:
  std::map<Exponents, Rational> terms_;
};

DiffOperator power(const DiffOperator& p, int exponent);

/// P applied to a Laurent polynomial: (t^i d^j) t^n = n(n-1)...(n-j+1) t^(n-j+i).
LaurentPolynomial apply(const DiffOperator& p, const LaurentPolynomial& g);

/// t^degree f(E); every homogeneous element of Diff(T) has this form uniquely.
struct HomogeneousComponent {
  int degree = 0;
  Polynomial euler;

  bool isZero() const { return euler.isZero(); }
  int order() const { return euler.degree(); }
  DiffOperator toOperator() const;
  /// Scalar by which this acts on t^n: f(n), landing in degree n + degree.
  Rational eigenvalueOn(const Rational& n) const { return euler(n); }

  friend bool operator==(const HomogeneousComponent& a, const HomogeneousComponent& b) {
    return a.euler == b.euler && (a.isZero() || a.degree == b.degree);
  }
};

/// (t^v g(E)) (t^w f(E)) = t^(v+w) g(E+w) f(E)
HomogeneousComponent operator*(const HomogeneousComponent& a, const HomogeneousComponent& b);

/// Homogeneous components with nonzero Euler polynomial, degrees increasing.
std::vector<HomogeneousComponent> decompose(const DiffOperator& p);
DiffOperator recompose(std::span<const HomogeneousComponent> parts);
/// The single component of a homogeneous operator (degree 0 for zero).
HomogeneousComponent asHomogeneous(const DiffOperator& p);

/// True iff P maps k[source] into k[target]. With source = target = Gamma this
/// is membership in D = Diff(k[Gamma]).
bool isMember(const DiffOperator& p, const NumericalSemigroup& source, const NumericalSemigroup& target);
bool isMember(const HomogeneousComponent& p, const NumericalSemigroup& source, const NumericalSemigroup& target);
inline bool isMember(const DiffOperator& p, const NumericalSemigroup& gamma) { return isMember(p, gamma, gamma); }

struct GradedDivision {
  HomogeneousComponent quotient;   // L
  HomogeneousComponent remainder;  // R, order(R) < order(Q)
};

/// P = L Q + R in Diff(T) for homogeneous P, Q with Q != 0.
GradedDivision gradedDivide(const HomogeneousComponent& p, const HomogeneousComponent& q);

/// Minimal-order generator of the left ideal of Diff(T) spanned by homogeneous
/// generators, normalized to degree 0 with monic Euler polynomial.
HomogeneousComponent principalGenerator(std::span<const HomogeneousComponent> gens);

/// "c*t^i*d^j + ..." with terms ordered by decreasing d-power, then t-power.
std::string toString(const DiffOperator& p);
std::string toString(const HomogeneousComponent& p);

}  // namespace dmod
