#include "dmod/indecomp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dmod {

HomogeneousComponent AlternatingWord::component() const {
  HomogeneousComponent acc{0, Polynomial(1)};
  for (Letter l : letters) acc = acc * (l == Letter::T ? HomogeneousComponent{1, Polynomial(1)}
                                                       : HomogeneousComponent{-1, Polynomial::x()});
  return acc;
}

std::string AlternatingWord::text() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += "*";
    out += letters[i] == Letter::T ? "t" : "d";
  }
  return out;
}

AlternatingWord word(Beta beta, int n) {
  if (n <= 0) throw PreconditionError("word length must be positive (got " + std::to_string(n) + ")");
  AlternatingWord w;
  w.beta = beta;
  w.letters.resize(static_cast<std::size_t>(n));
  Letter next = beta == Beta::Zero ? Letter::D : Letter::T;
  for (int i = n - 1; i >= 0; --i) {
    w.letters[static_cast<std::size_t>(i)] = next;
    next = next == Letter::T ? Letter::D : Letter::T;
  }
  return w;
}

Beta parseBeta(const std::string& text) {
  if (text == "0") return Beta::Zero;
  if (text == "inf" || text == "infinity") return Beta::Infinity;
  throw PreconditionError("beta must be 0 or inf (got " + text + ")");
}

namespace {

Indecomposable makeIndecomposable(std::string label, const HomogeneousComponent& p, int nMax) {
  const auto n0 = NumericalSemigroup::naturals();
  LeftIdealPresentation presentation(n0, {p.toOperator()});
  auto hilbert = dimensionMultiplicity(presentation, nMax);
  auto model = buildCyclicQuotient(n0, {p}, label);
  return {std::move(label), p, std::move(presentation), std::move(model), std::move(hilbert)};
}

}  // namespace

Indecomposable buildIndecomposable(const AlternatingWord& w, int nMax) {
  const std::string label =
      "M(" + std::string(w.beta == Beta::Zero ? "0" : "inf") + "," + std::to_string(w.length()) + ")";
  return makeIndecomposable(label, w.component(), nMax);
}

Indecomposable buildPowerIndecomposable(const Rational& alpha, int n, int nMax) {
  if (alpha <= 0 || alpha >= 1) throw PreconditionError("alpha must lie in (0, 1) (got " + toString(alpha) + ")");
  if (n <= 0) throw PreconditionError("power must be positive (got " + std::to_string(n) + ")");
  Polynomial g(1);
  for (int i = 0; i < n; ++i) g *= Polynomial::x() - Polynomial(alpha);
  return makeIndecomposable("M(" + toString(alpha) + "," + std::to_string(n) + ")", {0, g}, nMax);
}

std::string CompositionFactor::name() const {
  return "M_" + label.name() + "[" + std::to_string(twist) + "]" + (identified ? "" : "?");
}

std::vector<std::string> CompositionSeries::multiset() const {
  std::vector<std::string> out;
  for (const auto& f : factors) out.push_back(f.name());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

const HomogeneousComponent kEuler{0, Polynomial::x()};

long floorOf(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

/// Matches a simple module against A[c], M_inf[c + 1] or M_alpha[floor c], where
/// E acts on the piece in degree d by d + c.
CompositionFactor identify(const ModulePtr& w, const Window& window) {
  CompositionFactor out;
  out.module = w;
  const Window inner = window.inner();
  std::optional<Rational> shift;
  for (int d = inner.lo; d <= inner.hi; ++d) {
    if (w->dim(d) == 0) continue;
    if (w->dim(d) != 1) return out;
    const Rational c = w->act(kEuler, d)(0, 0) - Rational(d);
    if (shift && *shift != c) return out;
    shift = c;
  }
  if (!shift) return out;
  const auto& gamma = w->ring().gamma();
  std::vector<std::pair<SimpleLabel, int>> candidates;
  const long fl = floorOf(*shift);
  if (Rational(fl) != *shift) {
    candidates.emplace_back(SimpleLabel::of(*shift - Rational(fl)), static_cast<int>(fl));
  } else {
    candidates.emplace_back(SimpleLabel::zero(), static_cast<int>(fl));
    candidates.emplace_back(SimpleLabel::infinity(), static_cast<int>(fl) + 1);
  }
  out.label = candidates.front().first;
  out.twist = candidates.front().second;
  for (const auto& [label, n] : candidates) {
    if (isomorphicOnWindow(*w, *twist(buildSimple(gamma, label), n), window)) {
      out.label = label;
      out.twist = n;
      out.identified = true;
      return out;
    }
  }
  return out;
}

std::optional<Vector> eigenvector(const GradedModule& m, int d) {
  if (m.dim(d) == 1) return Vector::Ones(1);
  const Matrix e = m.act(kEuler, d);
  const auto roots = rationalRoots(minimalPolynomial(e));
  if (roots.empty()) return std::nullopt;
  return Vector(linalg::kernel(Matrix(e - roots.front() * Matrix::Identity(e.rows(), e.cols()))).col(0));
}

}  // namespace

CompositionSeries compositionSeries(const ModulePtr& module, const Window& window, SearchOrder order) {
  CompositionSeries series;
  const Window inner = window.inner();
  std::vector<std::pair<int, Vector>> lifted;
  ModulePtr current = module;
  std::shared_ptr<const Quotient> currentQuotient;
  const int maxFactors = 4 * (inner.size() + 4);

  for (int step = 0; step < maxFactors; ++step) {
    std::vector<int> degrees;
    for (int d = inner.lo; d <= inner.hi; ++d)
      if (current->dim(d) > 0) degrees.push_back(d);
    if (degrees.empty()) {
      series.complete = true;
      return series;
    }
    if (order == SearchOrder::Descending) std::reverse(degrees.begin(), degrees.end());

    int d = degrees.front();
    auto start = eigenvector(*current, d);
    if (!start) {
      series.note = "no rational E-eigenvector in degree " + std::to_string(d);
      return series;
    }
    Vector v = *start;
    std::shared_ptr<const Submodule> simple;
    for (int shrink = 0; shrink < 4 * inner.size(); ++shrink) {
      auto candidate = generatedSubmodule(current, {{d, v}});
      const auto cert = isSimpleCertified(*candidate, window);
      if (cert.verdict == Verdict::Yes) {
        simple = candidate;
        break;
      }
      if (cert.verdict == Verdict::Inconclusive || !cert.witness) {
        series.note = "simplicity inconclusive: " + cert.reason;
        return series;
      }
      d = cert.witness->first;
      v = candidate->basis(d) * cert.witness->second;
    }
    if (!simple) {
      series.note = "socle search did not terminate";
      return series;
    }
    series.factors.push_back(identify(simple, window));
    lifted.emplace_back(d, currentQuotient ? Vector(currentQuotient->lift(d) * v) : v);
    auto sub = generatedSubmodule(module, lifted, "S" + std::to_string(step + 1));
    currentQuotient = std::make_shared<Quotient>(module, sub, module->tag() + " / S" + std::to_string(step + 1));
    current = currentQuotient;
  }
  series.note = "too many factors for the window";
  return series;
}

namespace {

GradedMap restrictTo(const GradedMap& f, const Window& w) {
  GradedMap out;
  for (int d = w.lo; d <= w.hi; ++d) out.pieces[d] = f.pieces.at(d);
  return out;
}

Rational trace(const GradedMap& f) {
  Rational s = 0;
  for (const auto& [d, m] : f.pieces) s += m.trace();
  return s;
}

bool isZeroMap(const GradedMap& f) {
  return std::all_of(f.pieces.begin(), f.pieces.end(), [](const auto& kv) { return kv.second.isZero(); });
}

bool isIdentityMap(const GradedMap& f) {
  return std::all_of(f.pieces.begin(), f.pieces.end(),
                     [](const auto& kv) { return kv.second == Matrix::Identity(kv.second.rows(), kv.second.cols()); });
}

GradedMap evaluate(const Polynomial& p, const GradedMap& f) {
  GradedMap out;
  for (const auto& [d, m] : f.pieces) {
    Matrix acc = Matrix::Zero(m.rows(), m.cols());
    for (int k = p.degree(); k >= 0; --k)
      acc = acc * m + p.coefficient(k) * Matrix::Identity(m.rows(), m.cols());
    out.pieces[d] = acc;
  }
  return out;
}

Polynomial minimalPolynomialOf(const GradedMap& f) {
  Polynomial acc(1);
  for (const auto& [d, m] : f.pieces) {
    const Polynomial mu = minimalPolynomial(m);
    acc = exactQuotient(acc * mu, gcd(acc, mu));
  }
  return acc.monic();
}

/// b with a f + b g = 1 for coprime f, g.
Polynomial bezoutCoefficient(const Polynomial& f, const Polynomial& g) {
  Polynomial r0 = f, r1 = g, t0(0), t1(1);
  while (!r1.isZero()) {
    const auto qr = divmod(r0, r1);
    Polynomial r2 = qr.remainder, t2 = t0 - qr.quotient * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0) throw std::logic_error("bezout on non-coprime polynomials");
  return t0 * (Rational(1) / r0.leading());
}

std::optional<GradedMap> splittingIdempotent(const GradedMap& f) {
  const Polynomial mu = minimalPolynomialOf(f);
  for (const auto& root : rationalRoots(mu)) {
    const Polynomial linear = Polynomial::x() - Polynomial(root);
    Polynomial fpart(1), rest = mu;
    while (divides(linear, rest)) {
      rest = exactQuotient(rest, linear);
      fpart *= linear;
    }
    if (rest.degree() < 1) continue;
    const GradedMap e = evaluate(bezoutCoefficient(fpart, rest) * rest, f);
    if (!isZeroMap(e) && !isIdentityMap(e)) return e;
  }
  return std::nullopt;
}

}  // namespace

IndecomposabilityCertificate isIndecomposableCertified(const ModulePtr& module, const Window& window) {
  IndecomposabilityCertificate cert;
  const Window inner = window.inner();
  const HomSpace end = gradedHomDegreeZero(*module, *module, window);
  cert.endDim = end.dim();
  if (cert.endDim == 0) {
    cert.reason = "module vanishes on the inner window";
    return cert;
  }
  std::vector<GradedMap> basis;
  for (const auto& f : end.basis) basis.push_back(restrictTo(f, inner));

  Matrix gram(cert.endDim, cert.endDim);
  for (long i = 0; i < cert.endDim; ++i)
    for (long j = 0; j < cert.endDim; ++j)
      gram(i, j) = trace(compose(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]));
  cert.semisimpleDim = linalg::rank(gram);

  std::vector<GradedMap> candidates = basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      candidates.push_back(linearCombination({basis[i], basis[j]}, {Rational(1), Rational(1)}));
      candidates.push_back(compose(basis[i], basis[j]));
    }
  std::mt19937 rng(977);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int k = 0; k < 8 && basis.size() > 1; ++k) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < basis.size(); ++i) c.emplace_back(coeff(rng));
    candidates.push_back(linearCombination(basis, c));
  }
  for (const auto& f : candidates)
    if (auto e = splittingIdempotent(f)) {
      cert.verdict = Verdict::No;
      cert.idempotent = e;
      cert.reason = "nontrivial idempotent endomorphism";
      return cert;
    }

  const long wider = gradedHomDegreeZero(*module, *module, window.widened(4)).dim();
  if (wider != cert.endDim) {
    cert.reason = "endomorphism space changes when the window grows";
    return cert;
  }
  if (cert.semisimpleDim == 1) {
    cert.verdict = Verdict::Yes;
    cert.reason = "End / rad End = k, so End is local";
  } else {
    cert.reason = "no idempotent found but End / rad End has dimension " + std::to_string(cert.semisimpleDim);
  }
  return cert;
}

}  // namespace dmod
