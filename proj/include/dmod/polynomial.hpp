#pragma once

#include "dmod/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dmod {

/// Dense univariate polynomial over Q, coefficients stored low degree first
/// with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit on purpose, scalars are polynomials
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial x();
  static Polynomial monomial(int power, const Rational& coeff = 1);
  static Polynomial fromCoefficients(std::vector<Rational> lowFirst);
  /// prod (x - r) over the given roots; 1 for an empty list.
  static Polynomial fromRoots(std::span<const Rational> roots);
  static Polynomial fromRoots(std::span<const long> roots);
  /// x (x-1) ... (x-j+1)
  static Polynomial fallingFactorial(int j);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  Rational leading() const;

  Rational operator()(const Rational& at) const;
  /// f(x + shift)
  Polynomial shifted(const Rational& shift) const;
  Polynomial monic() const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// f = q g + r with deg r < deg g. Throws std::domain_error for g = 0.
PolynomialDivision divmod(const Polynomial& f, const Polynomial& g);
/// Exact quotient; throws std::domain_error if g does not divide f.
Polynomial exactQuotient(const Polynomial& f, const Polynomial& g);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& g, const Polynomial& f);

/// Coefficients c_j with f = sum_j c_j x(x-1)...(x-j+1).
std::vector<Rational> toFallingFactorialBasis(const Polynomial& f);

/// Unique polynomial of degree < n through n points with distinct abscissae.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Distinct rational roots, ascending.
std::vector<Rational> rationalRoots(const Polynomial& f);

std::string toString(const Polynomial& p, std::string_view var = "x");

/// Finite sum of c_n t^n, n in Z.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int power, const Rational& coeff = 1);

  const std::map<int, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Rational coefficient(int power) const;
  void add(int power, const Rational& coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& a);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<int, Rational> terms_;
};

std::string toString(const LaurentPolynomial& p);

}  // namespace dmod
