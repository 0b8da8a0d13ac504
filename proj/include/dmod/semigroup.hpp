#pragma once

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmod {

/// Raised when a mathematical precondition fails (bad generators, refused
/// requests). The CLI maps it to exit code 3.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical semigroup: a cofinite additive submonoid of N0 given by
/// coprime generators. Immutable after construction.
class NumericalSemigroup {
 public:
  /// Minimalizes the generator list. Throws PreconditionError on an empty
  /// list, a non-positive entry, or gcd != 1.
  explicit NumericalSemigroup(std::span<const int> rawGenerators);
  NumericalSemigroup(std::initializer_list<int> rawGenerators)
      : NumericalSemigroup(std::span<const int>(rawGenerators.begin(), rawGenerators.size())) {}

  /// The full semigroup N0 (coordinate ring k[t], Weyl algebra case).
  static NumericalSemigroup naturals();

  const std::vector<int>& generators() const { return generators_; }
  const std::vector<int>& gaps() const { return gaps_; }
  /// Largest gap, -1 for N0.
  int frobenius() const { return frobenius_; }
  bool isNaturals() const { return gaps_.empty(); }
  int multiplicity() const { return generators_.front(); }
  int maxGenerator() const { return generators_.back(); }

  bool contains(long n) const;

  /// {g in Gamma : g + w not in Gamma}, ascending.
  std::vector<int> omega(int w) const;
  /// |omega(w)|
  int sigma(int w) const;

  std::string label() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<int> generators_;
  std::vector<int> gaps_;
  std::vector<bool> member_;  // membership for 0..frobenius
  int frobenius_ = -1;
};

/// Lattice-point data of Gamma' = {(m, n) in N0^2 : n >= sigma(m - n)},
/// the exponent semigroup of the associated graded ring k[t, xi].
struct GammaPrimeData {
  std::set<std::pair<int, int>> gapPoints;  // N0^2 minus Gamma'
  int s = 0;                                // |gapPoints|
  /// Minimal generators (i, j) meaning t^i xi^j, found by brute force from
  /// the membership predicate. Empty when generators were not requested.
  std::set<std::pair<int, int>> minimalGenerators;
};

bool inGammaPrime(const NumericalSemigroup& gamma, int m, int n);

/// Smallest box side that contains every gap point of Gamma'.
int gammaPrimeRequiredBound(const NumericalSemigroup& gamma);

/// Enumerates Gamma' over [0, searchBound]^2. Throws PreconditionError when
/// the bound cannot certify completeness, or when minimal generators are
/// requested for Gamma = N0.
GammaPrimeData gammaPrime(const NumericalSemigroup& gamma, int searchBound, bool withGenerators = true);
GammaPrimeData gammaPrime(const NumericalSemigroup& gamma);

/// Drops duplicates and any element that is a sum of two nonzero elements of Gamma'.
std::set<std::pair<int, int>> pruneToMinimal(const NumericalSemigroup& gamma,
                                             const std::set<std::pair<int, int>>& candidates);

}  // namespace dmod
