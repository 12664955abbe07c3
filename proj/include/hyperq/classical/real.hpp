#pragma once

#include <quadmath.h>

#include <string>
#include <string_view>

namespace hyperq::classical {

// binary128. The embedded state reaches |x| ~ cosh(t) while C2, C3, H and J
// stay O(1), so double cancellation would sit near 1e-8.
using Real = __float128;

inline constexpr Real kPi = M_PIq;

// 36 significant digits, enough for an exact binary128 round trip.
std::string format_real(Real v);
// Throws std::invalid_argument unless the whole field is a number.
Real parse_real(std::string_view text);

}  // namespace hyperq::classical
