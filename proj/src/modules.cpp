#include "dmod/modules.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dmod {

namespace {

Matrix zeroMatrix(int rows, int cols) { return Matrix::Zero(rows, cols); }

HomogeneousComponent eulerOperator() { return {0, Polynomial::x()}; }

}  // namespace

MonomialModule::MonomialModule(ActingRing ring, std::string tag, std::function<bool(int)> support, Rational shift)
    : GradedModule(std::move(ring), std::move(tag)), support_(std::move(support)), shift_(std::move(shift)) {}

Matrix MonomialModule::act(const HomogeneousComponent& p, int degree) const {
  const int target = degree + p.degree;
  Matrix out = zeroMatrix(dim(target), dim(degree));
  if (out.size() == 1) out(0, 0) = p.euler(Rational(degree) + shift_);
  return out;
}

LatticeModule::LatticeModule(ActingRing ring, std::string tag, PolynomialFamily lattice, PolynomialFamily relations)
    : GradedModule(std::move(ring), std::move(tag)), latticeFn_(std::move(lattice)), relationsFn_(std::move(relations)) {}

const LatticeModule::Piece& LatticeModule::piece(int degree) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(degree);
  if (it != cache_.end()) return it->second;
  Piece p;
  p.lattice = latticeFn_(degree).monic();
  p.relations = relationsFn_(degree);
  if (p.lattice.isZero() || p.relations.isZero())
    throw PreconditionError("lattice model has an infinite-dimensional piece in degree " + std::to_string(degree));
  p.relations = p.relations.monic();
  p.modulus = exactQuotient(p.relations, p.lattice).monic();
  return cache_.emplace(degree, std::move(p)).first->second;
}

int LatticeModule::dim(int degree) const { return piece(degree).modulus.degree(); }

Matrix LatticeModule::act(const HomogeneousComponent& p, int degree) const {
  const Piece& src = piece(degree);
  const Piece& dst = piece(degree + p.degree);
  const int n = src.modulus.degree(), m = dst.modulus.degree();
  Matrix out = zeroMatrix(m, n);
  if (n == 0 || m == 0 || p.isZero()) return out;
  // t^u c(E) t^d l_d(E) f(E) = t^(d+u) c(E+d) l_d(E) f(E)
  const Polynomial base = p.euler.shifted(degree) * src.lattice;
  for (int s = 0; s < n; ++s) {
    const Polynomial image =
        divmod(exactQuotient(base * Polynomial::monomial(s), dst.lattice), dst.modulus).remainder;
    for (int r = 0; r < m; ++r) out(r, s) = image.coefficient(r);
  }
  return out;
}

Submodule::Submodule(ModulePtr parent, std::string tag, BasisFamily basis)
    : GradedModule(parent->ring(), std::move(tag)), parent_(std::move(parent)), basisFn_(std::move(basis)) {}

const Matrix& Submodule::basis(int degree) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(degree);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(degree, basisFn_(degree)).first->second;
}

Matrix Submodule::act(const HomogeneousComponent& p, int degree) const {
  const Matrix& src = basis(degree);
  const Matrix& dst = basis(degree + p.degree);
  if (src.cols() == 0) return zeroMatrix(static_cast<int>(dst.cols()), 0);
  const Matrix image = parent_->act(p, degree) * src;
  try {
    return linalg::coordinates(dst, image);
  } catch (const std::domain_error&) {
    throw std::logic_error("submodule '" + tag() + "' is not closed under " + toString(p));
  }
}

Quotient::Quotient(ModulePtr parent, std::shared_ptr<const Submodule> sub, std::string tag)
    : GradedModule(parent->ring(), std::move(tag)), parent_(std::move(parent)), sub_(std::move(sub)) {}

const Quotient::Piece& Quotient::piece(int degree) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(degree);
  if (it != cache_.end()) return it->second;
  const int n = parent_->dim(degree);
  const Matrix& s = sub_->basis(degree);
  Piece piece;
  if (s.cols() == 0) {
    piece.projection = Matrix::Identity(n, n);
    piece.lift = Matrix::Identity(n, n);
  } else {
    const auto e = linalg::rowEchelon(Matrix(s.transpose()));
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    int free = 0;
    std::vector<bool> isPivot(static_cast<std::size_t>(n), false);
    for (auto c : e.pivots) isPivot[static_cast<std::size_t>(c)] = true;
    for (int i = 0; i < n; ++i)
      if (!isPivot[static_cast<std::size_t>(i)]) slot[static_cast<std::size_t>(i)] = free++;
    piece.projection = zeroMatrix(free, n);
    piece.lift = zeroMatrix(n, free);
    for (int i = 0; i < n; ++i)
      if (slot[static_cast<std::size_t>(i)] >= 0) {
        piece.projection(slot[static_cast<std::size_t>(i)], i) = 1;
        piece.lift(i, slot[static_cast<std::size_t>(i)]) = 1;
      }
    for (Eigen::Index r = 0; r < e.rank(); ++r) {
      const auto p = e.pivots[static_cast<std::size_t>(r)];
      for (int j = 0; j < n; ++j)
        if (slot[static_cast<std::size_t>(j)] >= 0) piece.projection(slot[static_cast<std::size_t>(j)], p) = -e.reduced(r, j);
    }
  }
  return cache_.emplace(degree, std::move(piece)).first->second;
}

Matrix Quotient::act(const HomogeneousComponent& p, int degree) const {
  return projection(degree + p.degree) * parent_->act(p, degree) * lift(degree);
}

DirectSum::DirectSum(ModulePtr a, ModulePtr b)
    : GradedModule(a->ring(), a->tag() + " + " + b->tag()), a_(std::move(a)), b_(std::move(b)) {
  if (!(a_->ring() == b_->ring())) throw PreconditionError("direct sum of modules over different rings");
}

Matrix DirectSum::act(const HomogeneousComponent& p, int degree) const {
  const int target = degree + p.degree;
  const int a0 = a_->dim(degree), a1 = a_->dim(target);
  Matrix out = zeroMatrix(dim(target), dim(degree));
  out.topLeftCorner(a1, a0) = a_->act(p, degree);
  out.bottomRightCorner(b_->dim(target), b_->dim(degree)) = b_->act(p, degree);
  return out;
}

Twist::Twist(ModulePtr base, int shift)
    : GradedModule(base->ring(), base->tag() + "[" + std::to_string(shift) + "]"), base_(std::move(base)), shift_(shift) {}

Restriction::Restriction(ModulePtr base, const NumericalSemigroup& gamma)
    : GradedModule(ActingRing::differential(gamma), base->tag()), base_(std::move(base)) {
  if (!base_->ring().isLaurent()) throw PreconditionError("restriction expects a module over Diff(T)");
}

ModulePtr buildA(const NumericalSemigroup& gamma) {
  return std::make_shared<MonomialModule>(
      ActingRing::differential(gamma), "A", [gamma](int d) { return gamma.contains(d); }, Rational(0));
}

ModulePtr buildT(const NumericalSemigroup& gamma) {
  return std::make_shared<MonomialModule>(ActingRing::differential(gamma), "T", [](int) { return true; }, Rational(0));
}

ModulePtr buildTmodA(const NumericalSemigroup& gamma) {
  return std::make_shared<MonomialModule>(
      ActingRing::differential(gamma), "T/A", [gamma](int d) { return !gamma.contains(d); }, Rational(0));
}

ModulePtr buildNalpha(const Rational& alpha) {
  return std::make_shared<MonomialModule>(ActingRing::laurent(), "N_" + toString(alpha), [](int) { return true; },
                                          alpha);
}

ModulePtr buildCyclicQuotient(const NumericalSemigroup& gamma, const std::vector<HomogeneousComponent>& generators,
                              const std::string& tag) {
  std::vector<HomogeneousComponent> gens;
  for (const auto& g : generators)
    if (!g.isZero()) gens.push_back(g);
  if (gens.empty()) throw PreconditionError("D / 0 = D has infinite-dimensional graded pieces");
  for (const auto& g : gens)
    if (!isMember(g, gamma, gamma)) throw PreconditionError(toString(g) + " is not in D for " + gamma.label());
  std::string name = tag;
  if (name.empty()) {
    name = "D/D(";
    for (std::size_t i = 0; i < gens.size(); ++i) name += (i ? ", " : "") + toString(gens[i]);
    name += ")";
  }
  auto lattice = [gamma](int d) { return minimalOperator(gamma, d).euler; };
  // D_{d-v} t^v g(E) = t^d p_{d-v}(E + v) g(E) k[E]
  auto relations = [gamma, gens](int d) {
    Polynomial acc;
    for (const auto& g : gens) acc = gcd(acc, minimalOperator(gamma, d - g.degree).euler.shifted(g.degree) * g.euler);
    return acc;
  };
  return std::make_shared<LatticeModule>(ActingRing::differential(gamma), name, lattice, relations);
}

ModulePtr buildLaurentQuotient(const HomogeneousComponent& p, const std::string& tag) {
  if (p.isZero()) throw PreconditionError("Diff(T) / 0 has infinite-dimensional graded pieces");
  const Polynomial g = p.euler.monic();
  return std::make_shared<LatticeModule>(
      ActingRing::laurent(), tag.empty() ? "Diff(T)/Diff(T)(" + toString(p) + ")" : tag,
      [](int) { return Polynomial(1); }, [g](int) { return g; });
}

ModulePtr buildMalpha(const NumericalSemigroup& gamma, const Rational& alpha) {
  if (alpha < 0 || alpha >= 1) throw PreconditionError("alpha must lie in [0, 1) (got " + toString(alpha) + ")");
  if (alpha == 0) return buildA(gamma);
  return buildCyclicQuotient(gamma, {{0, Polynomial::x() - Polynomial(alpha)}}, "M_" + toString(alpha));
}

namespace {

/// prod over n >= 0 with n + d outside Gamma of (x - n): D(B, A)_d = t^d q_d(E) k[E].
Polynomial bimoduleLattice(const NumericalSemigroup& gamma, int d) {
  std::vector<long> roots;
  const int last = std::max(gamma.frobenius() - d, -d - 1);
  for (int n = 0; n <= last; ++n)
    if (!gamma.contains(n + d)) roots.push_back(n);
  return Polynomial::fromRoots(std::span<const long>(roots));
}

}  // namespace

ModulePtr buildMinfty(const NumericalSemigroup& gamma) {
  return std::make_shared<LatticeModule>(
      ActingRing::differential(gamma), "M_inf", [gamma](int d) { return bimoduleLattice(gamma, d); },
      [gamma](int d) { return bimoduleLattice(gamma, d - 1).shifted(1); });
}

ModulePtr twist(ModulePtr base, int shift) {
  if (shift == 0) return base;
  return std::make_shared<Twist>(std::move(base), shift);
}

ModulePtr directSum(ModulePtr a, ModulePtr b) { return std::make_shared<DirectSum>(std::move(a), std::move(b)); }

ModulePtr quotient(ModulePtr parent, std::shared_ptr<const Submodule> sub, const std::string& tag) {
  const std::string name = tag.empty() ? parent->tag() + " / " + sub->tag() : tag;
  return std::make_shared<Quotient>(std::move(parent), std::move(sub), name);
}

std::shared_ptr<const Submodule> generatedSubmodule(ModulePtr parent, std::vector<std::pair<int, Vector>> generators,
                                                    const std::string& tag) {
  const GradedModule* m = parent.get();
  auto basis = [m, generators](int target) {
    const int rows = m->dim(target);
    std::vector<Vector> columns;
    for (const auto& [d, v] : generators) {
      if (v.isZero()) continue;
      const auto p = m->ring().minimalOperator(target - d);
      Vector power = v;
      const Matrix e = m->act(eulerOperator(), d);
      const Matrix pw = m->act(p, d);
      for (int s = 0; s < m->dim(d); ++s) {
        columns.push_back(pw * power);
        power = e * power;
      }
    }
    Matrix all(rows, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t i = 0; i < columns.size(); ++i) all.col(static_cast<Eigen::Index>(i)) = columns[i];
    return linalg::columnBasis(all);
  };
  return std::make_shared<Submodule>(std::move(parent), tag.empty() ? "D v" : tag, basis);
}

std::shared_ptr<const Submodule> torsionSubmodule(ModulePtr module, const Window& window) {
  int g = window.size();
  if (!module->ring().isLaurent())
    while (!module->ring().gamma().contains(g)) ++g;
  const GradedModule* m = module.get();
  const HomogeneousComponent tg{g, Polynomial(1)};
  return std::make_shared<Submodule>(std::move(module), "torsion", [m, tg](int d) {
    return linalg::kernel(m->act(tg, d));
  });
}

namespace {

int localizationStart(const GradedModule& m, int d) {
  const int f = m.ring().isLaurent() ? -1 : m.ring().gamma().frobenius();
  return std::max(f + 1, f + 1 - d);
}

/// gcd over g in [start, start + span) of family(d + g), checked stable against a doubled range.
Polynomial stableGcd(const std::function<Polynomial(int)>& family, int d, int start, int span) {
  auto over = [&](int count) {
    Polynomial acc;
    for (int g = start; g < start + count; ++g) acc = gcd(acc, family(d + g));
    return acc;
  };
  const Polynomial first = over(span);
  if (over(2 * span) != first) throw std::logic_error("localization did not stabilize in degree " + std::to_string(d));
  return first;
}

}  // namespace

ModulePtr localize(const ModulePtr& module) {
  if (module->ring().isLaurent()) return module;
  const int mult = module->ring().gamma().multiplicity();
  const int f = module->ring().gamma().frobenius();
  if (auto lattice = std::dynamic_pointer_cast<const LatticeModule>(module)) {
    const GradedModule* raw = lattice.get();
    auto keep = lattice;
    const int span = 2 * mult + 2;
    auto l = [keep, raw, span](int d) {
      return stableGcd([&](int e) { return keep->lattice(e); }, d, localizationStart(*raw, d), span);
    };
    auto k = [keep, raw, span](int d) {
      return stableGcd([&](int e) { return keep->relations(e); }, d, localizationStart(*raw, d), span);
    };
    return std::make_shared<LatticeModule>(ActingRing::laurent(), "S^-1 " + module->tag(), l, k);
  }
  if (auto mono = std::dynamic_pointer_cast<const MonomialModule>(module)) {
    auto support = [mono, f](int d) { return mono->inSupport(d + f + 1 + std::abs(d)); };
    return std::make_shared<MonomialModule>(ActingRing::laurent(), "S^-1 " + module->tag(), support, mono->shift());
  }
  throw PreconditionError("localization is implemented for lattice and monomial models only");
}

Polynomial minimalPolynomial(const Matrix& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return Polynomial(1);
  std::vector<Vector> powers;
  Matrix current = Matrix::Identity(n, n);
  for (Eigen::Index k = 0; k <= n; ++k) {
    Vector flat = Eigen::Map<const Vector>(current.data(), n * n);
    Matrix previous(n * n, static_cast<Eigen::Index>(powers.size()));
    for (std::size_t i = 0; i < powers.size(); ++i) previous.col(static_cast<Eigen::Index>(i)) = powers[i];
    if (auto x = linalg::solve(previous, Matrix(flat))) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
      for (Eigen::Index i = 0; i < k; ++i) coeffs[static_cast<std::size_t>(i)] = -(*x)(i, 0);
      coeffs[static_cast<std::size_t>(k)] = 1;
      return Polynomial::fromCoefficients(coeffs);
    }
    powers.push_back(flat);
    current = current * a;
  }
  throw std::logic_error("minimal polynomial exceeded the matrix size");
}

std::vector<int> pieceDimensions(const GradedModule& module, const Window& window) {
  std::vector<int> out;
  for (int d = window.lo; d <= window.hi; ++d) out.push_back(module.dim(d));
  return out;
}

bool isZeroOn(const GradedModule& module, const Window& window) {
  for (int d = window.lo; d <= window.hi; ++d)
    if (module.dim(d) != 0) return false;
  return true;
}

std::optional<std::string> checkRingRelations(const GradedModule& module, const Window& window) {
  const auto& gens = module.ring().generators();
  for (const auto& a : gens)
    for (const auto& b : gens) {
      const auto ab = a * b;
      for (int d = window.lo; d <= window.hi; ++d) {
        const Matrix lhs = module.act(ab, d);
        const Matrix rhs = module.act(a, d + b.degree) * module.act(b, d);
        if (lhs != rhs)
          return "(" + toString(a) + ")(" + toString(b) + ") fails in degree " + std::to_string(d) + " of " +
                 module.tag();
      }
    }
  return std::nullopt;
}

GradedMap compose(const GradedMap& outer, const GradedMap& inner) {
  GradedMap out;
  for (const auto& [d, m] : inner.pieces) {
    auto it = outer.pieces.find(d);
    if (it != outer.pieces.end()) out.pieces[d] = it->second * m;
  }
  return out;
}

GradedMap linearCombination(const std::vector<GradedMap>& maps, const std::vector<Rational>& coeffs) {
  GradedMap out;
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (const auto& [d, m] : maps[i].pieces) {
      auto it = out.pieces.find(d);
      if (it == out.pieces.end())
        out.pieces[d] = coeffs[i] * m;
      else
        it->second += coeffs[i] * m;
    }
  return out;
}

HomSpace gradedHomDegreeZero(const GradedModule& m, const GradedModule& n, const Window& window) {
  if (!(m.ring() == n.ring()))
    throw PreconditionError("graded Hom needs modules over the same ring (" + m.ring().label() + " vs " +
                            n.ring().label() + ")");
  HomSpace out;
  out.window = window;
  out.inner = window.inner();

  // Unknowns: entries of phi_d (row-major), one block per degree.
  struct Block {
    int rows = 0, cols = 0;
    Eigen::Index offset = 0;
  };
  std::map<int, Block> blocks;
  Eigen::Index total = 0;
  for (int d = window.lo; d <= window.hi; ++d) {
    Block b{n.dim(d), m.dim(d), total};
    total += static_cast<Eigen::Index>(b.rows) * b.cols;
    blocks[d] = b;
  }
  if (total == 0) return out;

  // Constraint rows of N(g) phi_d - phi_{d+u} M(g) = 0, as a dense block over all unknowns.
  auto constraint = [&](const HomogeneousComponent& g, int d) {
    const Block& src = blocks.at(d);
    const Block& dst = blocks.at(d + g.degree);
    const Matrix an = n.act(g, d);  // dst.rows x src.rows
    const Matrix am = m.act(g, d);  // dst.cols x src.cols
    Matrix rows = Matrix::Zero(static_cast<Eigen::Index>(dst.rows) * src.cols, total);
    for (int i = 0; i < dst.rows; ++i)
      for (int j = 0; j < src.cols; ++j) {
        const Eigen::Index r = static_cast<Eigen::Index>(i) * src.cols + j;
        for (int k = 0; k < src.rows; ++k)
          if (an(i, k) != 0) rows(r, src.offset + static_cast<Eigen::Index>(k) * src.cols + j) += an(i, k);
        for (int k = 0; k < dst.cols; ++k)
          if (am(k, j) != 0) rows(r, dst.offset + static_cast<Eigen::Index>(i) * dst.cols + k) -= am(k, j);
      }
    return rows;
  };

  // Degree-preserving constraints first: block diagonal, solved piece by piece.
  Matrix solutions = Matrix::Zero(total, 0);
  {
    std::vector<Matrix> local;
    Eigen::Index cols = 0;
    const auto e = eulerOperator();
    for (int d = window.lo; d <= window.hi; ++d) {
      const Block& b = blocks.at(d);
      const Eigen::Index size = static_cast<Eigen::Index>(b.rows) * b.cols;
      if (size == 0) {
        local.emplace_back(0, 0);
        continue;
      }
      const Matrix full = constraint(e, d);
      local.push_back(linalg::kernel(Matrix(full.middleCols(b.offset, size))));
      cols += local.back().cols();
    }
    solutions = Matrix::Zero(total, cols);
    Eigen::Index c = 0;
    int idx = 0;
    for (int d = window.lo; d <= window.hi; ++d, ++idx) {
      const Matrix& k = local[static_cast<std::size_t>(idx)];
      if (k.cols() == 0) continue;
      solutions.block(blocks.at(d).offset, c, k.rows(), k.cols()) = k;
      c += k.cols();
    }
  }

  for (const auto& g : m.ring().generators()) {
    if (g.degree == 0) continue;
    for (int d = window.lo; d <= window.hi; ++d) {
      if (!window.contains(d + g.degree) || solutions.cols() == 0) continue;
      const Block& src = blocks.at(d);
      const Block& dst = blocks.at(d + g.degree);
      if (static_cast<long>(dst.rows) * src.cols == 0) continue;
      const Matrix c = constraint(g, d);
      const Matrix reduced = c * solutions;
      if (reduced.isZero()) continue;
      solutions = solutions * linalg::kernel(reduced);
    }
  }

  // Keep solutions independent on the inner window.
  std::vector<Eigen::Index> innerRows;
  for (int d = out.inner.lo; d <= out.inner.hi; ++d) {
    const Block& b = blocks.at(d);
    for (Eigen::Index r = 0; r < static_cast<Eigen::Index>(b.rows) * b.cols; ++r) innerRows.push_back(b.offset + r);
  }
  Matrix restricted(static_cast<Eigen::Index>(innerRows.size()), solutions.cols());
  for (std::size_t r = 0; r < innerRows.size(); ++r)
    restricted.row(static_cast<Eigen::Index>(r)) = solutions.row(innerRows[r]);
  if (restricted.rows() == 0 || solutions.cols() == 0) return out;
  const auto echelon = linalg::rowEchelon(restricted);
  for (auto col : echelon.pivots) {
    GradedMap map;
    for (const auto& [d, b] : blocks) {
      Matrix piece(b.rows, b.cols);
      for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) piece(i, j) = solutions(b.offset + static_cast<Eigen::Index>(i) * b.cols + j, col);
      map.pieces[d] = piece;
    }
    out.basis.push_back(std::move(map));
  }
  return out;
}

std::optional<GradedMap> isomorphismOnWindow(const GradedModule& m, const GradedModule& n, const Window& window) {
  const Window inner = window.inner();
  for (int d = inner.lo; d <= inner.hi; ++d)
    if (m.dim(d) != n.dim(d)) return std::nullopt;
  const HomSpace hom = gradedHomDegreeZero(m, n, window);
  auto invertibleInside = [&](const GradedMap& f) {
    for (int d = inner.lo; d <= inner.hi; ++d) {
      const Matrix& piece = f.pieces.at(d);
      if (linalg::rank(piece) != piece.rows()) return false;
    }
    return true;
  };
  if (isZeroOn(m, inner)) return hom.basis.empty() ? GradedMap{} : hom.basis.front();
  for (const auto& f : hom.basis)
    if (invertibleInside(f)) return f;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int attempt = 0; attempt < 12 && hom.dim() > 1; ++attempt) {
    std::vector<Rational> c;
    for (long i = 0; i < hom.dim(); ++i) c.emplace_back(coeff(rng));
    GradedMap f = linearCombination(hom.basis, c);
    if (invertibleInside(f)) return f;
  }
  return std::nullopt;
}

bool isomorphicOnWindow(const GradedModule& m, const GradedModule& n, const Window& window) {
  return isomorphismOnWindow(m, n, window).has_value();
}

std::string toString(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

SimplicityCertificate isSimpleCertified(const GradedModule& module, const Window& window) {
  SimplicityCertificate cert;
  cert.inner = window.inner();
  std::vector<int> support;
  for (int d = cert.inner.lo; d <= cert.inner.hi; ++d)
    if (module.dim(d) > 0) support.push_back(d);
  if (support.empty()) {
    cert.reason = "module vanishes on the inner window";
    return cert;
  }

  // A simple graded module has M_d = k[E] v for every nonzero v in M_d.
  for (int d : support) {
    if (module.dim(d) == 1) continue;
    const Matrix e = module.act(eulerOperator(), d);
    const auto roots = rationalRoots(minimalPolynomial(e));
    if (roots.empty()) {
      cert.reason = "E has no rational eigenvalue on the piece in degree " + std::to_string(d);
      return cert;
    }
    const Matrix shifted = e - roots.front() * Matrix::Identity(e.rows(), e.cols());
    cert.verdict = Verdict::No;
    cert.witness = std::make_pair(d, Vector(linalg::kernel(shifted).col(0)));
    cert.reason = "piece in degree " + std::to_string(d) + " has dimension " + std::to_string(module.dim(d)) +
                  " and an E-eigenvector";
    return cert;
  }

  for (int d : support) {
    int reached = 0;
    for (int target : support) {
      const Matrix image = module.act(module.ring().minimalOperator(target - d), d);
      if (!image.isZero()) {
        ++reached;
      } else if (cert.verdict != Verdict::No) {
        cert.verdict = Verdict::No;
        cert.witness = std::make_pair(d, Vector(Vector::Ones(1)));
        cert.reason = "D b_" + std::to_string(d) + " misses degree " + std::to_string(target);
      }
    }
    cert.closureRanks.emplace_back(d, reached);
  }
  if (cert.verdict != Verdict::No) {
    cert.verdict = Verdict::Yes;
    cert.reason = "every basis vector generates every inner piece";
  }
  return cert;
}

LocalizationCheck checkLocalization(const NumericalSemigroup& gamma, const Rational& alpha, const Window& window) {
  LocalizationCheck out;
  out.alpha = alpha;
  const auto m = buildMalpha(gamma, alpha);
  const auto local = localize(m);
  out.localizedDims = pieceDimensions(*local, window);
  out.isomorphic = isomorphicOnWindow(*local, *buildNalpha(alpha), window);
  out.torsionFree = isZeroOn(*torsionSubmodule(m, window), window);
  return out;
}

}  // namespace dmod
