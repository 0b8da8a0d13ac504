#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace Eigen {

// Exact rationals as an Eigen scalar. Zero epsilon keeps every comparison exact.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace dmod {

using Rational = mpq_class;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

/// "p/q", or "p" when the denominator is 1.
std::string toString(const Rational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parseRational(std::string_view text);

inline Rational makeRational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace dmod
