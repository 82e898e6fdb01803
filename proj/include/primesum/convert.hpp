#pragma once

#include "primesum/rational.hpp"
#include "primesum/real.hpp"

namespace primesum {

// Exact-to-float bridge. Values at or below 113 significant bits convert
// exactly; larger ones round once per limb (a few ulps at worst).
Real to_real(const BigInt& z);
Real to_real(const Rational& q);

}  // namespace primesum
