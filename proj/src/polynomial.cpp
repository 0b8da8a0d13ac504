#include "dmod/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dmod {

std::string toString(const Rational& q) { return q.get_str(); }

Rational parseRational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto checkInt = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  checkInt(num);
  checkInt(den);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::x() { return monomial(1); }

Polynomial Polynomial::monomial(int power, const Rational& coeff) {
  Polynomial p;
  if (coeff == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
  p.coeffs_.back() = coeff;
  return p;
}

Polynomial Polynomial::fromCoefficients(std::vector<Rational> lowFirst) {
  Polynomial p;
  p.coeffs_ = std::move(lowFirst);
  p.trim();
  return p;
}

Polynomial Polynomial::fromRoots(std::span<const Rational> roots) {
  Polynomial p(Rational(1));
  for (const auto& r : roots) p *= fromCoefficients({-r, Rational(1)});
  return p;
}

Polynomial Polynomial::fromRoots(std::span<const long> roots) {
  std::vector<Rational> rs(roots.begin(), roots.end());
  return fromRoots(std::span<const Rational>(rs));
}

Polynomial Polynomial::fallingFactorial(int j) {
  Polynomial p(Rational(1));
  for (int k = 0; k < j; ++k) p *= fromCoefficients({Rational(-k), Rational(1)});
  return p;
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::leading() const { return isZero() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::shifted(const Rational& shift) const {
  if (shift == 0) return *this;
  const Polynomial lin = fromCoefficients({shift, Rational(1)});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lin;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  Polynomial p = *this;
  p *= Rational(1) / leading();
  return p;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return fromCoefficients(std::move(d));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial::fromCoefficients(std::move(c));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

PolynomialDivision divmod(const Polynomial& f, const Polynomial& g) {
  if (g.isZero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = f.coefficients();
  const int dg = g.degree();
  const Rational lc = g.leading();
  std::vector<Rational> quot(f.degree() >= dg ? static_cast<std::size_t>(f.degree() - dg + 1) : 0, Rational(0));
  for (int k = f.degree(); k >= dg; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lc;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dg)] = c;
    for (int i = 0; i <= dg; ++i) rem[static_cast<std::size_t>(k - dg + i)] -= c * g.coefficient(i);
  }
  return {Polynomial::fromCoefficients(std::move(quot)), Polynomial::fromCoefficients(std::move(rem))};
}

Polynomial exactQuotient(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = divmod(f, g);
  if (!r.isZero()) throw std::domain_error("inexact polynomial quotient");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.isZero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool divides(const Polynomial& g, const Polynomial& f) {
  if (g.isZero()) return f.isZero();
  return divmod(f, g).remainder.isZero();
}

std::vector<Rational> toFallingFactorialBasis(const Polynomial& f) {
  // Newton forward differences at 0: c_j = (Delta^j f)(0) / j!
  const int d = f.degree();
  if (d < 0) return {};
  std::vector<Rational> diffs;
  for (int k = 0; k <= d; ++k) diffs.push_back(f(Rational(k)));
  std::vector<Rational> out;
  Rational fact = 1;
  for (int j = 0; j <= d; ++j) {
    if (j > 0) fact *= j;
    out.push_back(diffs[0] / fact);
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k) diffs[k] = diffs[k + 1] - diffs[k];
    diffs.pop_back();
  }
  return out;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  Polynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Polynomial::fromCoefficients({-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    if (denom == 0) throw std::invalid_argument("interpolate: repeated abscissa");
    out += basis * (ys[i] / denom);
  }
  return out;
}

namespace {

std::vector<mpz_class> divisorsOf(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rationalRoots(const Polynomial& f) {
  std::vector<Rational> roots;
  if (f.degree() <= 0) return roots;
  // Strip x = 0 roots, then clear denominators and apply the rational root test.
  Polynomial g = f;
  if (g.coefficient(0) == 0) {
    roots.push_back(0);
    while (g.coefficient(0) == 0) g = exactQuotient(g, Polynomial::x());
  }
  if (g.degree() > 0) {
    mpz_class lcm = 1;
    for (const auto& c : g.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : g.coefficients()) ints.push_back(mpz_class(c * lcm));
    for (const auto& p : divisorsOf(ints.front()))
      for (const auto& q : divisorsOf(ints.back()))
        for (int sign : {1, -1}) {
          Rational cand(sign * p, q);
          cand.canonicalize();
          if (g(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string toString(const Polynomial& p, std::string_view var) {
  if (p.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(k);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << toString(c);
    } else {
      if (c != 1) os << toString(c) << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

LaurentPolynomial LaurentPolynomial::monomial(int power, const Rational& coeff) {
  LaurentPolynomial p;
  p.add(power, coeff);
  return p;
}

Rational LaurentPolynomial::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add(int power, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(power, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [n, c] : o.terms_) add(n, c);
  return *this;
}

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& a) {
  LaurentPolynomial out;
  if (c == 0) return out;
  for (const auto& [n, x] : a.terms_) out.terms_.emplace(n, c * x);
  return out;
}

std::string toString(const LaurentPolynomial& p) {
  if (p.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (it->first == 0) {
      os << toString(c);
      continue;
    }
    if (c != 1) os << toString(c) << "*";
    os << "t";
    if (it->first != 1) os << "^" << it->first;
  }
  return os.str();
}

}  // namespace dmod
