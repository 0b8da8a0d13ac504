#pragma once

// Graded holonomic modules over the first Weyl algebra: alternating words,
// powers of E - alpha, composition series and indecomposability.

#include "dmod/ext.hpp"
#include "dmod/hilbert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dmod {

enum class Letter { T, D };
enum class Beta { Zero, Infinity };

struct AlternatingWord {
  Beta beta = Beta::Zero;
  std::vector<Letter> letters;

  int length() const { return static_cast<int>(letters.size()); }
  /// Product of the letters from left to right.
  HomogeneousComponent component() const;
  DiffOperator op() const { return component().toOperator(); }
  std::string text() const;  // "d*t"
};

/// Alternating, ending with d for beta = 0 and with t for beta = inf. Throws for n <= 0.
AlternatingWord word(Beta beta, int n);
Beta parseBeta(const std::string& text);

struct Indecomposable {
  std::string label;                    // "M(inf,2)", "M(1/2,3)"
  HomogeneousComponent generator;       // P with M = D / DP
  LeftIdealPresentation presentation;
  ModulePtr model;
  DimensionMultiplicity hilbert;
};

Indecomposable buildIndecomposable(const AlternatingWord& w, int nMax = 40);
/// D / D (E - alpha)^n for alpha in (0, 1).
Indecomposable buildPowerIndecomposable(const Rational& alpha, int n, int nMax = 40);

struct CompositionFactor {
  SimpleLabel label;
  int twist = 0;
  bool identified = false;  // an explicit isomorphism with the catalog model was found
  ModulePtr module;
  std::string name() const;  // "M_0[-1]"
};

struct CompositionSeries {
  std::vector<CompositionFactor> factors;  // bottom to top: socle factor first
  bool complete = false;                   // quotient vanishes on the inner window
  std::string note;
  int length() const { return static_cast<int>(factors.size()); }
  /// Factor names, sorted.
  std::vector<std::string> multiset() const;
};

enum class SearchOrder { Ascending, Descending };

/// Iterated socle search: find v whose submodule D v is simple in the current
/// quotient, identify D v against A, M_inf, M_alpha up to twist, divide out, repeat.
CompositionSeries compositionSeries(const ModulePtr& module, const Window& window,
                                    SearchOrder order = SearchOrder::Ascending);

struct IndecomposabilityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  long endDim = 0;        // degree-zero endomorphisms, independent on the inner window
  long semisimpleDim = 0; // rank of the trace form = dim End / rad End
  std::optional<GradedMap> idempotent;
  std::string reason;
};

IndecomposabilityCertificate isIndecomposableCertified(const ModulePtr& module, const Window& window);

}  // namespace dmod
