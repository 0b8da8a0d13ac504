#include "dmod/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dmod {

NumericalSemigroup::NumericalSemigroup(std::span<const int> rawGenerators) {
  if (rawGenerators.empty()) throw PreconditionError("generator list must be nonempty");
  int g = 0;
  for (int a : rawGenerators) {
    if (a < 1) throw PreconditionError("generators must be positive integers");
    g = std::gcd(g, a);
  }
  if (g != 1) throw PreconditionError("gcd must be 1 (got " + std::to_string(g) + ")");

  std::vector<int> raw(rawGenerators.begin(), rawGenerators.end());
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  const int smallest = raw.front();

  // Sieve until `smallest` consecutive members appear; everything after is in.
  std::vector<bool> sieve{true};
  int run = 1;
  while (run < smallest) {
    const int n = static_cast<int>(sieve.size());
    bool in = false;
    for (int a : raw)
      if (a <= n && sieve[static_cast<std::size_t>(n - a)]) {
        in = true;
        break;
      }
    sieve.push_back(in);
    run = in ? run + 1 : 0;
  }
  for (int n = 0; n < static_cast<int>(sieve.size()); ++n)
    if (!sieve[static_cast<std::size_t>(n)]) gaps_.push_back(n);
  frobenius_ = gaps_.empty() ? -1 : gaps_.back();
  member_.assign(sieve.begin(), sieve.begin() + (frobenius_ + 1));

  // Minimal generators: nonzero elements that are not a sum of two nonzero elements.
  for (int a : raw) {
    bool reducible = false;
    for (int b = 1; b <= a / 2 && !reducible; ++b) reducible = contains(b) && contains(a - b);
    if (!reducible) generators_.push_back(a);
  }
}

NumericalSemigroup NumericalSemigroup::naturals() { return NumericalSemigroup{1}; }

bool NumericalSemigroup::contains(long n) const {
  if (n < 0) return false;
  if (n > frobenius_) return true;
  return member_[static_cast<std::size_t>(n)];
}

std::vector<int> NumericalSemigroup::omega(int w) const {
  // g + w > frobenius forces membership, so g <= max(-w - 1, frobenius - w).
  std::vector<int> out;
  const int top = std::max(-w - 1, frobenius_ - w);
  for (int g = 0; g <= top; ++g)
    if (contains(g) && !contains(static_cast<long>(g) + w)) out.push_back(g);
  return out;
}

int NumericalSemigroup::sigma(int w) const { return static_cast<int>(omega(w).size()); }

std::string NumericalSemigroup::label() const {
  if (isNaturals()) return "N0";
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? "," : "") << generators_[i];
  os << ">";
  return os.str();
}

bool inGammaPrime(const NumericalSemigroup& gamma, int m, int n) {
  if (m < 0 || n < 0) return false;
  return n >= gamma.sigma(m - n);
}

int gammaPrimeRequiredBound(const NumericalSemigroup& gamma) {
  // Gap points have coordinates < sigma(-u) = sigma(u) + u for some 0 <= u <= frobenius.
  int bound = 0;
  for (int u = 0; u <= gamma.frobenius(); ++u) bound = std::max(bound, gamma.sigma(-u) - 1);
  return bound;
}

namespace {

bool reducibleInGammaPrime(const NumericalSemigroup& gamma, int m, int n) {
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) {
      if ((i == 0 && j == 0) || (i == m && j == n)) continue;
      if (inGammaPrime(gamma, i, j) && inGammaPrime(gamma, m - i, n - j)) return true;
    }
  return false;
}

}  // namespace

GammaPrimeData gammaPrime(const NumericalSemigroup& gamma, int searchBound, bool withGenerators) {
  if (searchBound < gammaPrimeRequiredBound(gamma))
    throw PreconditionError("searchBound " + std::to_string(searchBound) + " cannot certify Gamma' gaps (need " +
                            std::to_string(gammaPrimeRequiredBound(gamma)) + ")");
  GammaPrimeData out;
  for (int m = 0; m <= searchBound; ++m)
    for (int n = 0; n <= searchBound; ++n)
      if (!inGammaPrime(gamma, m, n)) out.gapPoints.emplace(m, n);
  out.s = static_cast<int>(out.gapPoints.size());
  if (!withGenerators) return out;
  if (gamma.isNaturals())
    throw PreconditionError("minimal generators of Gamma' are only described for Gamma != N0");

  // Irreducibles are (1,1), axis generators, or boundary points with |m - n| <= max(F, a_r);
  // all such points lie in this box.
  const int box = std::max(searchBound, 2 * gamma.frobenius() + gamma.maxGenerator() + 2);
  for (int m = 0; m <= box; ++m)
    for (int n = 0; n <= box; ++n) {
      if ((m == 0 && n == 0) || !inGammaPrime(gamma, m, n)) continue;
      if (!reducibleInGammaPrime(gamma, m, n)) out.minimalGenerators.emplace(m, n);
    }
  return out;
}

GammaPrimeData gammaPrime(const NumericalSemigroup& gamma) {
  return gammaPrime(gamma, std::max(2 * gamma.frobenius() + 4, gammaPrimeRequiredBound(gamma)),
                    !gamma.isNaturals());
}

std::set<std::pair<int, int>> pruneToMinimal(const NumericalSemigroup& gamma,
                                             const std::set<std::pair<int, int>>& candidates) {
  std::set<std::pair<int, int>> out;
  for (const auto& [m, n] : candidates)
    if (!reducibleInGammaPrime(gamma, m, n)) out.emplace(m, n);
  return out;
}

}  // namespace dmod
