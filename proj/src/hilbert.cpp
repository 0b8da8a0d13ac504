#include "dmod/hilbert.hpp"

#include "dmod/diffring.hpp"
#include "dmod/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dmod {

BernsteinLayer bernsteinLayer(const NumericalSemigroup& gamma, int n) {
  BernsteinLayer layer;
  layer.n = n;
  // 2 sigma(w) + w >= |w| for every w, so only |w| <= n can contribute.
  for (int w = -n; w <= n; ++w) {
    const int base = 2 * gamma.sigma(w) + w;
    for (int s = 0; base + 2 * s <= n; ++s) layer.basis.emplace_back(w, s);
  }
  return layer;
}

long bernsteinDim(const NumericalSemigroup& gamma, int n) {
  long count = 0;
  for (int w = -n; w <= n; ++w) {
    const int slack = n - 2 * gamma.sigma(w) - w;
    if (slack >= 0) count += slack / 2 + 1;
  }
  return count;
}

long bernsteinClosedForm(const NumericalSemigroup& gamma, int n) {
  const long nn = n;
  return (nn + 1) * (nn + 2) / 2 - gammaPrime(gamma, gammaPrimeRequiredBound(gamma), false).s;
}

int bernsteinOnset(const NumericalSemigroup& gamma) {
  const auto data = gammaPrime(gamma, gammaPrimeRequiredBound(gamma), false);
  int onset = 0;
  for (const auto& [m, n] : data.gapPoints) onset = std::max(onset, m + n);
  return onset;
}

LeftIdealPresentation::LeftIdealPresentation(NumericalSemigroup gamma, std::vector<DiffOperator> generators)
    : gamma_(std::move(gamma)) {
  for (auto& g : generators) {
    if (g.isZero()) continue;
    if (!isMember(g, gamma_))
      throw PreconditionError("ideal generator " + toString(g) + " is not in D for " + gamma_.label());
    bernsteinDegrees_.push_back(g.bernsteinDegree());
    generators_.push_back(std::move(g));
  }
}

bool LeftIdealPresentation::allHomogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.isHomogeneous(); });
}

namespace {

std::vector<DiffOperator> layerOperators(const NumericalSemigroup& gamma, int n) {
  std::vector<DiffOperator> out;
  if (n < 0) return out;
  for (const auto& [w, s] : bernsteinLayer(gamma, n).basis) {
    auto p = minimalOperator(gamma, w);
    p.euler *= Polynomial::monomial(s);
    out.push_back(p.toOperator());
  }
  return out;
}

/// dim (B^n cap span(ops)) for ops inside D.
long intersectionWithLayer(const std::vector<DiffOperator>& ops, int n) {
  std::map<DiffOperator::Exponents, Eigen::Index> index;
  for (const auto& op : ops)
    for (const auto& [e, c] : op.terms()) index.try_emplace(e, 0);
  Eigen::Index next = 0;
  for (auto& [e, k] : index) k = next++;
  Matrix all = Matrix::Zero(next, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t col = 0; col < ops.size(); ++col)
    for (const auto& [e, c] : ops[col].terms()) all(index[e], static_cast<Eigen::Index>(col)) = c;
  std::vector<Eigen::Index> highRows;
  for (const auto& [e, k] : index)
    if (e.first + e.second > n) highRows.push_back(k);
  Matrix high(static_cast<Eigen::Index>(highRows.size()), all.cols());
  for (std::size_t r = 0; r < highRows.size(); ++r) high.row(static_cast<Eigen::Index>(r)) = all.row(highRows[r]);
  return linalg::rank(all) - linalg::rank(high);
}

}  // namespace

HilbertProfile moduleHilbert(const LeftIdealPresentation& ideal, int nMax, int saturationWindow) {
  if (nMax < 0) throw PreconditionError("nMax must be nonnegative");
  const auto& gamma = ideal.gamma();
  HilbertProfile profile;
  profile.saturationWindow = saturationWindow;
  profile.dims.reserve(static_cast<std::size_t>(nMax) + 1);

  if (ideal.isZeroIdeal() || ideal.isPrincipal()) {
    // gr D is a domain, so B^n cap D P = B^(n - b(P)) P.
    profile.exact = true;
    const int b = ideal.isZeroIdeal() ? -1 : ideal.bernsteinDegrees().front();
    for (int n = 0; n <= nMax; ++n) {
      const long inIdeal = ideal.isZeroIdeal() ? 0 : bernsteinDim(gamma, n - b);
      profile.dims.push_back(bernsteinDim(gamma, n) - inIdeal);
    }
    return profile;
  }

  if (ideal.allHomogeneous()) {
    // I is graded with I_w = t^w kappa_w(E) k[E], kappa_w = gcd_i p_{w-v_i}(E + v_i) g_i(E).
    profile.exact = true;
    std::vector<HomogeneousComponent> gens;
    for (const auto& g : ideal.generators()) gens.push_back(asHomogeneous(g));
    std::vector<int> kappaDegree;
    for (int w = -nMax; w <= nMax; ++w) {
      Polynomial kappa;
      for (const auto& g : gens) kappa = gcd(kappa, minimalOperator(gamma, w - g.degree).euler.shifted(g.degree) * g.euler);
      kappaDegree.push_back(kappa.degree());
    }
    for (int n = 0; n <= nMax; ++n) {
      long inIdeal = 0;
      for (int w = -n; w <= n; ++w) {
        const int room = (n - w) / 2 - kappaDegree[static_cast<std::size_t>(w + nMax)] + 1;
        if (room > 0) inIdeal += room;
      }
      profile.dims.push_back(bernsteinDim(gamma, n) - inIdeal);
    }
    return profile;
  }

  profile.exact = false;
  for (int n = 0; n <= nMax; ++n) {
    long previous = -1, current = -1;
    for (int level = n; level <= n + saturationWindow; ++level) {
      std::vector<DiffOperator> products;
      for (std::size_t i = 0; i < ideal.generators().size(); ++i)
        for (const auto& q : layerOperators(gamma, level - ideal.bernsteinDegrees()[i]))
          products.push_back(q * ideal.generators()[i]);
      previous = current;
      current = intersectionWithLayer(products, n);
    }
    if (saturationWindow > 0 && previous != current) profile.stabilized = false;
    profile.dims.push_back(bernsteinDim(gamma, n) - current);
  }
  return profile;
}

Rational QuasiPolynomial::evaluate(long index) const {
  const long r = ((index % period) + period) % period;
  const long n = (index - r) / period;
  return polys[static_cast<std::size_t>(r)](Rational(n));
}

namespace {

Rational binomialCoefficient(int n, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out = out * Rational(n - i) / Rational(i + 1);
  return out;
}

/// Coefficients of (1 - t^m)^k times the series sum dims[n] t^n, up to t^N.
std::vector<Rational> differenceSeries(std::span<const long> dims, int m, int k) {
  std::vector<Rational> out(dims.size(), Rational(0));
  for (std::size_t n = 0; n < dims.size(); ++n)
    for (int j = 0; j <= k; ++j) {
      const long back = static_cast<long>(n) - static_cast<long>(j) * m;
      if (back < 0) break;
      Rational term = binomialCoefficient(k, j) * Rational(dims[static_cast<std::size_t>(back)]);
      if (j % 2) term = -term;
      out[n] += term;
    }
  return out;
}

long factorial(int d) {
  long out = 1;
  for (int i = 2; i <= d; ++i) out *= i;
  return out;
}

}  // namespace

QuasiPolynomial fitQuasiPolynomial(std::span<const long> dims, int maxDimension) {
  if (dims.empty()) throw FitError("empty Hilbert profile", 8);
  const int nMax = static_cast<int>(dims.size()) - 1;
  if (std::all_of(dims.begin(), dims.end(), [](long v) { return v == 0; })) {
    QuasiPolynomial zero;
    zero.polys = {Polynomial()};
    zero.zeroModule = true;
    return zero;
  }
  for (int i = 1; i < static_cast<int>(dims.size()); ++i)
    if (dims[static_cast<std::size_t>(i)] < dims[static_cast<std::size_t>(i - 1)])
      throw PreconditionError("Hilbert profile must be nondecreasing");

  const int maxPeriod = std::max(1, (nMax + 1) / 3);
  for (int d = 0; d <= maxDimension; ++d) {
    for (int m = 1; m <= maxPeriod; ++m) {
      // h is eventually quasi-polynomial of degree <= d and period m iff
      // (1 - t^m)^(d+1) H(t) is a polynomial.
      const auto c = differenceSeries(dims, m, d + 1);
      int last = -1;
      for (int n = nMax; n >= 0; --n)
        if (c[static_cast<std::size_t>(n)] != 0) {
          last = n;
          break;
        }
      if (nMax - last < 2 * m) continue;
      const int onset = std::max(0, last - m * (d + 1) + 1);
      if (onset + m * (d + 1) - 1 + 2 * m > nMax) continue;

      QuasiPolynomial qp;
      qp.period = m;
      qp.dimension = d;
      qp.onset = onset;
      for (int r = 0; r < m; ++r) {
        std::vector<Rational> xs, ys;
        for (int idx = r; idx <= nMax && static_cast<int>(xs.size()) < d + 1; idx += m) {
          if (idx < onset) continue;
          xs.push_back(Rational((idx - r) / m));
          ys.push_back(Rational(dims[static_cast<std::size_t>(idx)]));
        }
        qp.polys.push_back(interpolate(xs, ys));
      }
      for (int idx = onset; idx <= nMax; ++idx)
        if (qp.evaluate(idx) != Rational(dims[static_cast<std::size_t>(idx)]))
          throw std::logic_error("quasi-polynomial fit does not reproduce the profile");

      const Rational lead = qp.polys.front().coefficient(d);
      for (const auto& p : qp.polys)
        if (p.degree() != d || p.coefficient(d) != lead)
          throw PreconditionError("quasi-polynomial components do not share a leading term");
      const Rational e = lead * Rational(factorial(d));
      if (e.get_den() != 1 || e <= 0) throw PreconditionError("multiplicity is not a positive integer");
      qp.multiplicity = e.get_num().get_si();

      std::vector<Rational> head(c.begin(), c.begin() + (last + 1));
      const auto numerator = divmod(Polynomial::fromCoefficients(head),
                                    Polynomial::fromCoefficients(std::vector<Rational>(static_cast<std::size_t>(m), 1)));
      if (!numerator.remainder.isZero() || numerator.quotient(Rational(1)) != e)
        throw std::logic_error("series numerator disagrees with the fitted multiplicity");
      qp.numerator = numerator.quotient;
      return qp;
    }
  }
  throw FitError("Hilbert profile too short to certify a quasi-polynomial (nMax = " + std::to_string(nMax) + ")",
                 2 * nMax + 2);
}

DimensionMultiplicity dimensionMultiplicity(const LeftIdealPresentation& ideal, int nMax) {
  DimensionMultiplicity out;
  const bool cheap = ideal.isZeroIdeal() || ideal.isPrincipal() || ideal.allHomogeneous();
  for (int attempt = 0;; ++attempt) {
    out.profile = moduleHilbert(ideal, nMax);
    try {
      out.fit = fitQuasiPolynomial(out.profile.dims);
      break;
    } catch (const FitError& err) {
      if (!cheap || attempt >= 3) throw;
      nMax = std::max(err.requiredNMax(), 2 * nMax);
    }
  }
  out.d = out.fit.dimension;
  out.e = out.fit.multiplicity;
  if (!out.fit.zeroModule && (out.d < 1 || out.d > 2))
    throw std::logic_error("dimension outside [1, 2] for a nonzero D-module");
  return out;
}

bool isHolonomic(const LeftIdealPresentation& ideal, int nMax) {
  const auto dm = dimensionMultiplicity(ideal, nMax);
  return dm.fit.zeroModule || dm.d == 1;
}

}  // namespace dmod
