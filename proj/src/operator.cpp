#include "dmod/operator.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dmod {

namespace {

/// n (n-1) ... (n-k+1) for integer n (any sign).
Rational fallingFactorialValue(long n, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= Rational(n - i);
  return out;
}

Rational binomial(int n, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out = out * Rational(n - i) / Rational(i + 1);
  return out;
}

}  // namespace

DiffOperator::DiffOperator(const Rational& constant) { addTerm(0, 0, constant); }

DiffOperator DiffOperator::term(int tPower, int dPower, const Rational& coeff) {
  if (dPower < 0) throw std::invalid_argument("negative power of d");
  DiffOperator p;
  p.addTerm(tPower, dPower, coeff);
  return p;
}

void DiffOperator::addTerm(int tPower, int dPower, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({tPower, dPower}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational DiffOperator::coefficient(int tPower, int dPower) const {
  auto it = terms_.find({tPower, dPower});
  return it == terms_.end() ? Rational(0) : it->second;
}

int DiffOperator::order() const {
  int out = -1;
  for (const auto& [e, c] : terms_) out = std::max(out, e.second);
  return out;
}

std::optional<int> DiffOperator::degree() const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    const int w = e.first - e.second;
    if (deg && *deg != w) return std::nullopt;
    deg = w;
  }
  return deg;
}

int DiffOperator::bernsteinDegree() const {
  if (isZero()) throw std::domain_error("Bernstein degree of the zero operator");
  int out = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) out = std::max(out, e.first + e.second);
  return out;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e.first, e.second, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e.first, e.second, -c);
  return *this;
}

DiffOperator operator-(const DiffOperator& a) { return Rational(-1) * a; }

DiffOperator operator*(const Rational& c, const DiffOperator& a) {
  DiffOperator out;
  if (c == 0) return out;
  for (const auto& [e, x] : a.terms_) out.terms_.emplace(e, c * x);
  return out;
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  // (t^i d^j)(t^k d^l) = sum_r C(j,r) k(k-1)...(k-r+1) t^(i+k-r) d^(j-r+l)
  DiffOperator out;
  for (const auto& [ea, ca] : a.terms_) {
    const auto [i, j] = ea;
    for (const auto& [eb, cb] : b.terms_) {
      const auto [k, l] = eb;
      const Rational c = ca * cb;
      for (int r = 0; r <= j; ++r) {
        const Rational ff = fallingFactorialValue(k, r);
        if (ff == 0) break;
        out.addTerm(i + k - r, j - r + l, c * binomial(j, r) * ff);
      }
    }
  }
  return out;
}

DiffOperator power(const DiffOperator& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative operator power");
  DiffOperator out(1);
  for (int i = 0; i < exponent; ++i) out = out * p;
  return out;
}

LaurentPolynomial apply(const DiffOperator& p, const LaurentPolynomial& g) {
  LaurentPolynomial out;
  for (const auto& [e, c] : p.terms()) {
    const auto [i, j] = e;
    for (const auto& [n, x] : g.terms()) out.add(n - j + i, c * x * fallingFactorialValue(n, j));
  }
  return out;
}

DiffOperator HomogeneousComponent::toOperator() const {
  // t^w x(x-1)...(x-j+1) at x = E equals t^(w+j) d^j.
  DiffOperator out;
  const auto coeffs = toFallingFactorialBasis(euler);
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    out.addTerm(degree + static_cast<int>(j), static_cast<int>(j), coeffs[j]);
  return out;
}

HomogeneousComponent operator*(const HomogeneousComponent& a, const HomogeneousComponent& b) {
  return {a.degree + b.degree, a.euler.shifted(Rational(b.degree)) * b.euler};
}

std::vector<HomogeneousComponent> decompose(const DiffOperator& p) {
  std::map<int, Polynomial> byDegree;
  for (const auto& [e, c] : p.terms()) {
    const auto [i, j] = e;
    byDegree[i - j] += Polynomial::fallingFactorial(j) * c;
  }
  std::vector<HomogeneousComponent> out;
  for (auto& [w, f] : byDegree)
    if (!f.isZero()) out.push_back({w, std::move(f)});
  return out;
}

DiffOperator recompose(std::span<const HomogeneousComponent> parts) {
  DiffOperator out;
  for (const auto& part : parts) out += part.toOperator();
  return out;
}

HomogeneousComponent asHomogeneous(const DiffOperator& p) {
  const auto parts = decompose(p);
  if (parts.empty()) return {};
  if (parts.size() > 1) throw PreconditionError("operator is not homogeneous: " + toString(p));
  return parts.front();
}

bool isMember(const HomogeneousComponent& p, const NumericalSemigroup& source, const NumericalSemigroup& target) {
  if (p.isZero()) return true;
  const int w = p.degree;
  // g + w leaves the target only if g + w < 0 or g + w is a gap of the target.
  const int top = std::max(-w - 1, target.frobenius() - w);
  for (int g = 0; g <= top; ++g) {
    if (!source.contains(g) || target.contains(static_cast<long>(g) + w)) continue;
    if (p.euler(Rational(g)) != 0) return false;
  }
  return true;
}

bool isMember(const DiffOperator& p, const NumericalSemigroup& source, const NumericalSemigroup& target) {
  for (const auto& part : decompose(p))
    if (!isMember(part, source, target)) return false;
  return true;
}

GradedDivision gradedDivide(const HomogeneousComponent& p, const HomogeneousComponent& q) {
  if (q.isZero()) throw PreconditionError("graded division by the zero operator");
  // L = t^(w-v) h(E) with h(x + v) g(x) = f(x) - r(x).
  const auto [quot, rem] = divmod(p.euler, q.euler);
  GradedDivision out;
  out.quotient = {p.degree - q.degree, quot.shifted(Rational(-q.degree))};
  out.remainder = {p.degree, rem};
  return out;
}

HomogeneousComponent principalGenerator(std::span<const HomogeneousComponent> gens) {
  if (gens.empty()) throw PreconditionError("principal generator of an empty list");
  std::optional<HomogeneousComponent> acc;
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    if (!acc) {
      acc = g;
      continue;
    }
    HomogeneousComponent a = *acc, b = g;
    if (a.order() < b.order()) std::swap(a, b);
    while (!b.isZero()) {
      HomogeneousComponent r = gradedDivide(a, b).remainder;
      a = std::move(b);
      b = std::move(r);
    }
    acc = a;
  }
  if (!acc) throw PreconditionError("principal generator of the zero ideal");
  return {0, acc->euler.monic()};
}

std::string toString(const DiffOperator& p) {
  if (p.isZero()) return "0";
  std::vector<std::pair<DiffOperator::Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms) {
    const bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    if (c != 1 || (e.first == 0 && e.second == 0)) factors.push_back(toString(c));
    if (e.first != 0) factors.push_back(e.first == 1 ? "t" : "t^" + std::to_string(e.first));
    if (e.second != 0) factors.push_back(e.second == 1 ? "d" : "d^" + std::to_string(e.second));
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

std::string toString(const HomogeneousComponent& p) {
  std::ostringstream os;
  os << "t^" << p.degree << "*(" << toString(p.euler, "E") << ")";
  return os.str();
}

}  // namespace dmod
