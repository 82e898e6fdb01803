#pragma once

#include <quadmath.h>

#include <string>

namespace primesum {

// Working real type for all numeric (non-symbolic) evaluation: IEEE binary128,
// 113-bit mantissa. Exact integers below 2^113 convert without rounding, which
// covers every prime sum this tool produces.
using Real = __float128;

inline Real rlog(Real x) { return logq(x); }
inline Real rexp(Real x) { return expq(x); }
inline Real rabs(Real x) { return fabsq(x); }
inline Real rsqrt(Real x) { return sqrtq(x); }

// x^k by repeated multiplication, k >= 0. Degrees here never exceed ~10.
Real rpow_int(Real x, int k);

// One unit in the last place at the magnitude of x (0 for x == 0).
Real ulp_of(Real x);

// |a - b| measured in ulps of the larger magnitude. Returns 0 when a == b.
Real ulp_distance(Real a, Real b);

// Decimal rendering with the given number of significant digits.
std::string format_real(Real x, int significant_digits = 15);

}  // namespace primesum
