#pragma once

// Graded left modules over D (or over Diff(T)) with exact graded pieces.
//
// Models are lazy: every degree can be queried, so a "window" only limits
// which degrees a yes/no question looks at. Each piece M_d has a fixed basis,
// and a homogeneous ring element of degree u acts by a dim(d+u) x dim(d) matrix.

#include "dmod/diffring.hpp"
#include "dmod/linalg.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace dmod {

struct Window {
  int lo = -12;
  int hi = 12;

  int size() const { return hi - lo + 1; }
  bool contains(int d) const { return lo <= d && d <= hi; }
  /// Middle two thirds.
  Window inner() const {
    const int margin = (hi - lo) / 6;
    return {lo + margin, hi - margin};
  }
  Window widened(int by) const { return {lo - by, hi + by}; }
  friend bool operator==(const Window&, const Window&) = default;
};

class GradedModule {
 public:
  GradedModule(ActingRing ring, std::string tag) : ring_(std::move(ring)), tag_(std::move(tag)) {}
  virtual ~GradedModule() = default;

  const ActingRing& ring() const { return ring_; }
  const std::string& tag() const { return tag_; }

  virtual int dim(int degree) const = 0;
  /// Matrix of p on M_degree, of size dim(degree + p.degree) x dim(degree).
  virtual Matrix act(const HomogeneousComponent& p, int degree) const = 0;

 private:
  ActingRing ring_;
  std::string tag_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

/// Pieces of dimension at most one: basis b_n for n in the support, with
/// t^u c(E) b_n = c(n + shift) b_{n+u} (zero when n + u leaves the support).
/// A, T, T/A and N_alpha are of this form with b_n = t^(n) (shifted by alpha).
class MonomialModule : public GradedModule {
 public:
  MonomialModule(ActingRing ring, std::string tag, std::function<bool(int)> support, Rational shift);
  int dim(int degree) const override { return support_(degree) ? 1 : 0; }
  Matrix act(const HomogeneousComponent& p, int degree) const override;
  bool inSupport(int degree) const { return support_(degree); }
  const Rational& shift() const { return shift_; }

 private:
  std::function<bool(int)> support_;
  Rational shift_;
};

/// L / K for graded left submodules K subset L of Diff(T) with
/// L_d = t^d l_d(E) k[E] and K_d = t^d kappa_d(E) k[E]. The piece in degree d
/// is k[x] / (kappa_d / l_d) with basis the classes of t^d l_d(E) E^s.
class LatticeModule : public GradedModule {
 public:
  using PolynomialFamily = std::function<Polynomial(int)>;
  LatticeModule(ActingRing ring, std::string tag, PolynomialFamily lattice, PolynomialFamily relations);

  int dim(int degree) const override;
  Matrix act(const HomogeneousComponent& p, int degree) const override;

  Polynomial lattice(int degree) const { return piece(degree).lattice; }
  Polynomial relations(int degree) const { return piece(degree).relations; }
  /// kappa_d / l_d, monic.
  Polynomial pieceModulus(int degree) const { return piece(degree).modulus; }

 private:
  struct Piece {
    Polynomial lattice, relations, modulus;
  };
  const Piece& piece(int degree) const;

  PolynomialFamily latticeFn_, relationsFn_;
  mutable std::map<int, Piece> cache_;
  mutable std::mutex mutex_;
};

/// A graded submodule given by a basis (columns, parent coordinates) per degree.
class Submodule : public GradedModule {
 public:
  using BasisFamily = std::function<Matrix(int)>;
  Submodule(ModulePtr parent, std::string tag, BasisFamily basis);

  int dim(int degree) const override { return static_cast<int>(basis(degree).cols()); }
  Matrix act(const HomogeneousComponent& p, int degree) const override;
  const Matrix& basis(int degree) const;
  const ModulePtr& parent() const { return parent_; }

 private:
  ModulePtr parent_;
  BasisFamily basisFn_;
  mutable std::map<int, Matrix> cache_;
  mutable std::mutex mutex_;
};

/// parent / sub. Coordinates are the parent coordinates off the pivots of sub.
class Quotient : public GradedModule {
 public:
  Quotient(ModulePtr parent, std::shared_ptr<const Submodule> sub, std::string tag);

  int dim(int degree) const override { return static_cast<int>(piece(degree).lift.cols()); }
  Matrix act(const HomogeneousComponent& p, int degree) const override;
  /// dim(quotient) x dim(parent)
  const Matrix& projection(int degree) const { return piece(degree).projection; }
  /// dim(parent) x dim(quotient), projection * lift = identity.
  const Matrix& lift(int degree) const { return piece(degree).lift; }
  const ModulePtr& parent() const { return parent_; }

 private:
  struct Piece {
    Matrix projection, lift;
  };
  const Piece& piece(int degree) const;

  ModulePtr parent_;
  std::shared_ptr<const Submodule> sub_;
  mutable std::map<int, Piece> cache_;
  mutable std::mutex mutex_;
};

class DirectSum : public GradedModule {
 public:
  DirectSum(ModulePtr a, ModulePtr b);
  int dim(int degree) const override { return a_->dim(degree) + b_->dim(degree); }
  Matrix act(const HomogeneousComponent& p, int degree) const override;

 private:
  ModulePtr a_, b_;
};

/// M[n]_i = M_{n+i}
class Twist : public GradedModule {
 public:
  Twist(ModulePtr base, int shift);
  int dim(int degree) const override { return base_->dim(shift_ + degree); }
  Matrix act(const HomogeneousComponent& p, int degree) const override { return base_->act(p, shift_ + degree); }

 private:
  ModulePtr base_;
  int shift_;
};

/// A module over Diff(T) viewed over D(gamma).
class Restriction : public GradedModule {
 public:
  Restriction(ModulePtr base, const NumericalSemigroup& gamma);
  int dim(int degree) const override { return base_->dim(degree); }
  Matrix act(const HomogeneousComponent& p, int degree) const override { return base_->act(p, degree); }

 private:
  ModulePtr base_;
};

// Catalog of explicit models.

/// A = k[Gamma] with basis t^g, g in Gamma.
ModulePtr buildA(const NumericalSemigroup& gamma);
/// T = k[t, t^-1] over D(gamma).
ModulePtr buildT(const NumericalSemigroup& gamma);
ModulePtr buildTmodA(const NumericalSemigroup& gamma);
/// N_alpha = Diff(T) / Diff(T)(E - alpha) over Diff(T): t e_n = e_{n+1}, d e_n = (alpha + n) e_{n-1}.
ModulePtr buildNalpha(const Rational& alpha);
/// D / D(E - alpha) for 0 < alpha < 1 and A for alpha = 0. Refuses alpha outside [0, 1).
ModulePtr buildMalpha(const NumericalSemigroup& gamma, const Rational& alpha);
/// D(B, A) / D(B, A) t, the image of V(0) = D/Dt; for N0 the basis is f_j = [d^j] in degree -j.
ModulePtr buildMinfty(const NumericalSemigroup& gamma);
/// D / I for a left ideal generated by homogeneous elements of D.
ModulePtr buildCyclicQuotient(const NumericalSemigroup& gamma, const std::vector<HomogeneousComponent>& generators,
                              const std::string& tag = "");
/// Diff(T) / Diff(T) P, over Diff(T).
ModulePtr buildLaurentQuotient(const HomogeneousComponent& p, const std::string& tag = "");

ModulePtr twist(ModulePtr base, int shift);
ModulePtr directSum(ModulePtr a, ModulePtr b);
ModulePtr quotient(ModulePtr parent, std::shared_ptr<const Submodule> sub, const std::string& tag = "");

/// D v_1 + ... + D v_k for homogeneous vectors (degree, coordinates). Exact in every degree:
/// (D v)_{d'} is spanned by P_{d'-d} E^s v, s < dim M_d.
std::shared_ptr<const Submodule> generatedSubmodule(ModulePtr parent, std::vector<std::pair<int, Vector>> generators,
                                                    const std::string& tag = "");
/// Elements killed by t^g for g the least element of Gamma that is at least window.size().
std::shared_ptr<const Submodule> torsionSubmodule(ModulePtr module, const Window& window);
/// S^-1 M over Diff(T), S = {t^g}. Supported for lattice and monomial models.
ModulePtr localize(const ModulePtr& module);

/// Monic minimal polynomial of a square matrix (1 for the empty matrix).
Polynomial minimalPolynomial(const Matrix& a);

std::vector<int> pieceDimensions(const GradedModule& module, const Window& window);
bool isZeroOn(const GradedModule& module, const Window& window);
/// For all generators a, b of the ring and all d in the window:
/// act(a b, d) = act(a, d + deg b) act(b, d). Returns the first failure, if any.
std::optional<std::string> checkRingRelations(const GradedModule& module, const Window& window);

// Homomorphisms of degree zero.

struct GradedMap {
  std::map<int, Matrix> pieces;  // degree -> dim N_d x dim M_d
};

GradedMap compose(const GradedMap& outer, const GradedMap& inner);
GradedMap linearCombination(const std::vector<GradedMap>& maps, const std::vector<Rational>& coeffs);

struct HomSpace {
  Window window;  // unknowns live on this window
  Window inner;   // maps are compared on this window
  /// Maps commuting with every generator on the window, independent on `inner`.
  std::vector<GradedMap> basis;
  long dim() const { return static_cast<long>(basis.size()); }
};

/// Degree-zero maps M -> N commuting with the ring generators inside the window.
/// Maps that vanish on the inner window are discarded as truncation artifacts.
HomSpace gradedHomDegreeZero(const GradedModule& m, const GradedModule& n, const Window& window);

/// An explicit degree-zero map on the window, invertible on every inner piece, if one exists.
std::optional<GradedMap> isomorphismOnWindow(const GradedModule& m, const GradedModule& n, const Window& window);
bool isomorphicOnWindow(const GradedModule& m, const GradedModule& n, const Window& window);

// Simplicity.

enum class Verdict { Yes, No, Inconclusive };
std::string toString(Verdict v);

struct SimplicityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  Window inner;
  /// For each nonzero inner degree d: number of nonzero inner pieces reached by D b_d.
  std::vector<std::pair<int, int>> closureRanks;
  /// When not simple: a homogeneous vector generating a proper submodule.
  std::optional<std::pair<int, Vector>> witness;
  std::string reason;
};

SimplicityCertificate isSimpleCertified(const GradedModule& module, const Window& window);

// Localization checks S^-1 M_alpha = N_alpha.

struct LocalizationCheck {
  Rational alpha;
  bool isomorphic = false;
  bool torsionFree = false;
  std::vector<int> localizedDims;
};
LocalizationCheck checkLocalization(const NumericalSemigroup& gamma, const Rational& alpha, const Window& window);

}  // namespace dmod
