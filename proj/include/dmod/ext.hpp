#pragma once

// Ext^1 between graded simple modules, through the resolution
// 0 -> D[-v] -> D -> D/DP -> 0 of a cyclic module with homogeneous P of degree v.

#include "dmod/modules.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dmod {

/// The simple modules M_0 = A, M_inf and M_alpha (alpha in (0, 1)).
struct SimpleLabel {
  enum class Kind { Zero, Alpha, Infinity };
  Kind kind = Kind::Zero;
  Rational alpha;  // only for Kind::Alpha

  static SimpleLabel zero() { return {Kind::Zero, Rational(0)}; }
  static SimpleLabel infinity() { return {Kind::Infinity, Rational(0)}; }
  static SimpleLabel of(const Rational& alpha);  // 0 maps to zero()

  std::string name() const;  // "0", "inf", "1/2"
  friend bool operator==(const SimpleLabel& a, const SimpleLabel& b) {
    return a.kind == b.kind && (a.kind != Kind::Alpha || a.alpha == b.alpha);
  }
  friend bool operator<(const SimpleLabel& a, const SimpleLabel& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.kind == Kind::Alpha && a.alpha < b.alpha;
  }
};

/// Parses "0", "inf", or a rational in (0, 1).
SimpleLabel parseSimpleLabel(const std::string& text);

ModulePtr buildSimple(const NumericalSemigroup& gamma, const SimpleLabel& label);
/// P with M = D / DP: d (for M_0 over N0), t (M_inf over N0), E - alpha (any Gamma).
/// Throws PreconditionError when the module has no such presentation here.
HomogeneousComponent cyclicPresentation(const NumericalSemigroup& gamma, const SimpleLabel& label);

struct ExtPieces {
  std::map<int, long> hom;   // d -> dim ker(P : N_d -> N_{d+v})
  std::map<int, long> ext1;  // d -> dim N_d / P N_{d-v}
  long homTotal() const;
  long ext1Total() const;
};

/// Graded pieces of Hom(D/DP, N) and Ext^1(D/DP, N), indexed by the degree of N.
/// With this indexing Ext^1(D/Dt, A) over N0 sits in degree 0.
ExtPieces ext1Cyclic(const HomogeneousComponent& p, const GradedModule& n, const Window& window);

struct ExtTableEntry {
  SimpleLabel source;  // alpha in Ext^1(M_alpha, M_beta)
  SimpleLabel target;  // beta
  long homDim = 0;     // Hom(M_alpha, M_beta) in degree 0
  long ext1Dim = 0;    // summed over the window
  std::optional<int> gradedDegree;
  bool windowStable = false;
  long expected = 0;
  /// The same cell computed directly with models over Gamma, when Gamma != N0
  /// and the source has a principal presentation there.
  std::optional<long> generalHom;
  std::optional<long> generalExt1;
  bool agrees() const {
    return (!generalExt1 || *generalExt1 == ext1Dim) && (!generalHom || *generalHom == homDim);
  }
};

/// 1 exactly for (0, inf), (inf, 0) and alpha = beta in (0, 1).
long expectedExt1(const SimpleLabel& source, const SimpleLabel& target);

/// All pairs over {0, inf} and the samples, computed over the Weyl algebra.
/// For other Gamma the cells with source M_alpha are recomputed over Gamma.
std::vector<ExtTableEntry> extTable(const NumericalSemigroup& gamma, const std::vector<Rational>& alphas,
                                    const Window& window = {});

struct NonSplitWitness {
  ModulePtr middle;                      // D / D dt over N0
  std::shared_ptr<const Submodule> sub;  // generated by the class of t
  ModulePtr quotient;
  bool subIsTwistedA = false;            // sub = A[-1]
  bool quotientIsMinfty = false;
  long homFromMinfty = 0;                // Hom(M_inf, middle) in degree 0
  bool nonSplit() const { return subIsTwistedA && quotientIsMinfty && homFromMinfty == 0; }
};

NonSplitWitness nonSplitWitness(const Window& window = {});

}  // namespace dmod
