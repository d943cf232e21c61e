#pragma once

#include <string_view>

#include "harmonia/polynomial.hpp"

namespace harmonia {

/// x1^2 x2^4 + x1^4 x2^2 + x3^6 - 3 x1^2 x2^2 x3^2.
HomogeneousPolynomial motzkin();

/// The nonnegative quartic in four variables expanded from
/// x1^2 (x1 - x4)^2 + x2^2 (x2 - x4)^2 + x3^2 (x3 - x4)^2
///   + 2 x1 x2 x3 (x1 + x2 + x3 - 2 x4).
HomogeneousPolynomial robinson();

/// "motzkin" or "robinson"; throws std::invalid_argument otherwise.
HomogeneousPolynomial builtin_polynomial(std::string_view name);

}  // namespace harmonia
