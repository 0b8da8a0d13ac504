#pragma once

// Bernstein filtration of D, Hilbert functions of cyclic modules D/I, and the
// quasi-polynomial fit giving dimension d(M) and multiplicity e(M).

#include "dmod/diffring.hpp"

#include <span>
#include <utility>
#include <vector>

namespace dmod {

struct BernsteinLayer {
  int n = 0;
  /// (w, s) indexing P_w E^s with 2(sigma(w) + s) + w <= n.
  std::vector<std::pair<int, int>> basis;
  long dim() const { return static_cast<long>(basis.size()); }
};

BernsteinLayer bernsteinLayer(const NumericalSemigroup& gamma, int n);
/// #{(w, s) : s >= 0, 2 sigma(w) + 2 s + w <= n}; 0 for n < 0.
long bernsteinDim(const NumericalSemigroup& gamma, int n);
/// (n+1)(n+2)/2 - s
long bernsteinClosedForm(const NumericalSemigroup& gamma, int n);
/// Smallest n0 such that bernsteinDim agrees with the closed form for all n >= n0:
/// the largest total degree m + n of a gap point of Gamma' (0 if none).
int bernsteinOnset(const NumericalSemigroup& gamma);

/// Generators of a left ideal I of D, all of them elements of D.
class LeftIdealPresentation {
 public:
  /// Drops zero generators; throws PreconditionError if one lies outside D.
  LeftIdealPresentation(NumericalSemigroup gamma, std::vector<DiffOperator> generators);

  const NumericalSemigroup& gamma() const { return gamma_; }
  const std::vector<DiffOperator>& generators() const { return generators_; }
  const std::vector<int>& bernsteinDegrees() const { return bernsteinDegrees_; }
  bool isZeroIdeal() const { return generators_.empty(); }
  bool isPrincipal() const { return generators_.size() == 1; }
  bool allHomogeneous() const;

 private:
  NumericalSemigroup gamma_;
  std::vector<DiffOperator> generators_;
  std::vector<int> bernsteinDegrees_;
};

struct HilbertProfile {
  std::vector<long> dims;  // dim M_n for n = 0..nMax, M_n the image of B^n in D/I
  bool exact = false;      // no saturation involved
  bool stabilized = true;  // saturation reached a fixed point for every n
  int saturationWindow = 0;
};

/// dims[n] = dim B^n - dim (B^n cap I). Principal ideals use
/// dim (B^n cap D P) = dim B^(n - b(P)); ideals with homogeneous generators
/// are counted degree by degree; other ideals saturate
/// B^n cap sum_i B^(N - b_i) g_i over N = n .. n + saturationWindow.
HilbertProfile moduleHilbert(const LeftIdealPresentation& ideal, int nMax, int saturationWindow = 6);

/// dim M_{nm + r} = polys[r](n) for all n with nm + r >= onset.
struct QuasiPolynomial {
  int period = 1;
  std::vector<Polynomial> polys;
  int dimension = 0;
  long multiplicity = 0;
  int onset = 0;
  bool zeroModule = false;
  /// Numerator a(t) = (1 - t) H(t) (1 - t^m)^d of the Hilbert series; a(1) = e.
  Polynomial numerator;

  Rational evaluate(long index) const;
};

class FitError : public PreconditionError {
 public:
  FitError(const std::string& what, int requiredNMax) : PreconditionError(what), requiredNMax_(requiredNMax) {}
  int requiredNMax() const { return requiredNMax_; }

 private:
  int requiredNMax_;
};

/// Smallest d, then smallest period m, such that dims is eventually a period-m
/// quasi-polynomial of degree d, certified on a tail of at least 2m further values.
QuasiPolynomial fitQuasiPolynomial(std::span<const long> dims, int maxDimension = 4);

struct DimensionMultiplicity {
  int d = 0;
  long e = 0;
  QuasiPolynomial fit;
  HilbertProfile profile;
};

/// moduleHilbert + fitQuasiPolynomial; checks 1 <= d <= 2 for nonzero modules.
DimensionMultiplicity dimensionMultiplicity(const LeftIdealPresentation& ideal, int nMax = 60);
/// d = 1, or the zero module.
bool isHolonomic(const LeftIdealPresentation& ideal, int nMax = 60);

}  // namespace dmod
