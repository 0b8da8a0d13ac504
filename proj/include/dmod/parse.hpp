#pragma once

#include "dmod/operator.hpp"

#include <string_view>
#include <vector>

namespace dmod {

/// Parses operator text such as "E-1/2", "d*t", "(E-1/3)^2", "t^-2*d + 3*t",
/// "P[-1]". Atoms: rationals, t, d, E, P[w] (needs `gamma`). Binary + - *,
/// juxtaposition multiplies, ^ takes an integer exponent (negative only on t).
/// Throws std::invalid_argument on malformed text.
DiffOperator parseOperator(std::string_view text, const NumericalSemigroup* gamma = nullptr);

/// Generators separated by ';'.
std::vector<DiffOperator> parseOperatorList(std::string_view text, const NumericalSemigroup* gamma = nullptr);

std::vector<int> parseIntList(std::string_view text);
std::vector<Rational> parseRationalList(std::string_view text);

}  // namespace dmod
