#include "dmod/ext.hpp"

#include "dmod/parallel.hpp"

#include <stdexcept>

namespace dmod {

SimpleLabel SimpleLabel::of(const Rational& alpha) {
  if (alpha == 0) return zero();
  return {Kind::Alpha, alpha};
}

std::string SimpleLabel::name() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::Infinity:
      return "inf";
    case Kind::Alpha:
      return toString(alpha);
  }
  return "?";
}

SimpleLabel parseSimpleLabel(const std::string& text) {
  if (text == "inf" || text == "infinity") return SimpleLabel::infinity();
  const Rational a = parseRational(text);
  if (a < 0 || a >= 1) throw PreconditionError("simple label must be inf or a rational in [0, 1) (got " + text + ")");
  return SimpleLabel::of(a);
}

ModulePtr buildSimple(const NumericalSemigroup& gamma, const SimpleLabel& label) {
  switch (label.kind) {
    case SimpleLabel::Kind::Zero:
      return buildA(gamma);
    case SimpleLabel::Kind::Infinity:
      return buildMinfty(gamma);
    case SimpleLabel::Kind::Alpha:
      return buildMalpha(gamma, label.alpha);
  }
  throw std::logic_error("unknown simple label");
}

HomogeneousComponent cyclicPresentation(const NumericalSemigroup& gamma, const SimpleLabel& label) {
  switch (label.kind) {
    case SimpleLabel::Kind::Alpha:
      return {0, Polynomial::x() - Polynomial(label.alpha)};
    case SimpleLabel::Kind::Zero:
      if (!gamma.isNaturals()) break;
      return {-1, Polynomial::x()};
    case SimpleLabel::Kind::Infinity:
      if (!gamma.isNaturals()) break;
      return {1, Polynomial(1)};
  }
  throw PreconditionError("M_" + label.name() + " has no principal presentation over " + gamma.label() + " here");
}

long ExtPieces::homTotal() const {
  long s = 0;
  for (const auto& [d, v] : hom) s += v;
  return s;
}

long ExtPieces::ext1Total() const {
  long s = 0;
  for (const auto& [d, v] : ext1) s += v;
  return s;
}

ExtPieces ext1Cyclic(const HomogeneousComponent& p, const GradedModule& n, const Window& window) {
  ExtPieces out;
  for (int d = window.lo; d <= window.hi; ++d) {
    const long here = n.dim(d);
    out.hom[d] = here - static_cast<long>(linalg::rank(n.act(p, d)));
    out.ext1[d] = here - static_cast<long>(linalg::rank(n.act(p, d - p.degree)));
  }
  return out;
}

long expectedExt1(const SimpleLabel& source, const SimpleLabel& target) {
  using K = SimpleLabel::Kind;
  if (source.kind == K::Zero && target.kind == K::Infinity) return 1;
  if (source.kind == K::Infinity && target.kind == K::Zero) return 1;
  if (source.kind == K::Alpha && source == target) return 1;
  return 0;
}

std::vector<ExtTableEntry> extTable(const NumericalSemigroup& gamma, const std::vector<Rational>& alphas,
                                    const Window& window) {
  std::vector<SimpleLabel> labels{SimpleLabel::zero(), SimpleLabel::infinity()};
  for (const auto& a : alphas) {
    if (a <= 0 || a >= 1) throw PreconditionError("alpha samples must lie in (0, 1) (got " + toString(a) + ")");
    labels.push_back(SimpleLabel::of(a));
  }
  std::vector<std::pair<SimpleLabel, SimpleLabel>> cells;
  for (const auto& s : labels)
    for (const auto& t : labels) cells.emplace_back(s, t);
  const auto weyl = NumericalSemigroup::naturals();
  std::vector<ExtTableEntry> out(cells.size());
  parallelFor(cells.size(), [&](std::size_t i) {
    const auto& [source, target] = cells[i];
    ExtTableEntry e;
    e.source = source;
    e.target = target;
    e.expected = expectedExt1(source, target);
    const auto p = cyclicPresentation(weyl, source);
    const auto n = buildSimple(weyl, target);
    const auto pieces = ext1Cyclic(p, *n, window);
    const auto wider = ext1Cyclic(p, *n, window.widened(4));
    e.homDim = pieces.hom.at(0);
    e.ext1Dim = pieces.ext1Total();
    for (const auto& [d, v] : pieces.ext1)
      if (v != 0 && !e.gradedDegree) e.gradedDegree = d;
    e.windowStable = wider.ext1Total() == e.ext1Dim && wider.homTotal() == pieces.homTotal();
    if (!gamma.isNaturals() && source.kind == SimpleLabel::Kind::Alpha) {
      const auto g = ext1Cyclic(cyclicPresentation(gamma, source), *buildSimple(gamma, target), window);
      e.generalHom = g.hom.at(0);
      e.generalExt1 = g.ext1Total();
    }
    out[i] = e;
  });
  return out;
}

NonSplitWitness nonSplitWitness(const Window& window) {
  const auto n0 = NumericalSemigroup::naturals();
  NonSplitWitness w;
  // d t = E + 1
  w.middle = buildCyclicQuotient(n0, {{0, Polynomial::x() + Polynomial(1)}}, "D/D(dt)");
  if (w.middle->dim(1) != 1) throw std::logic_error("D/D(dt) should have a one-dimensional piece in degree 1");
  w.sub = generatedSubmodule(w.middle, {{1, Vector::Ones(1)}}, "Dt/D(dt)");
  w.quotient = quotient(w.middle, w.sub, "D/Dt");
  w.subIsTwistedA = isomorphicOnWindow(*w.sub, *twist(buildA(n0), -1), window);
  w.quotientIsMinfty = isomorphicOnWindow(*w.quotient, *buildMinfty(n0), window);
  w.homFromMinfty = gradedHomDegreeZero(*buildMinfty(n0), *w.middle, window).dim();
  return w;
}

}  // namespace dmod
