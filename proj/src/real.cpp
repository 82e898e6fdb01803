#include "primesum/real.hpp"

#include <stdexcept>

#include "primesum/convert.hpp"

namespace primesum {

Real to_real(const BigInt& z) {
    const size_t limbs = mpz_size(z.get_mpz_t());
    Real r = 0;
    const Real base = 18446744073709551616.0Q;  // 2^64
    for (size_t k = limbs; k-- > 0;) r = r * base + static_cast<Real>(mpz_getlimbn(z.get_mpz_t(), k));
    return sgn(z) < 0 ? -r : r;
}

Real to_real(const Rational& q) { return to_real(q.num()) / to_real(q.den()); }

Real rpow_int(Real x, int k) {
    if (k < 0) throw std::invalid_argument("rpow_int: negative exponent");
    Real r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

Real ulp_of(Real x) {
    if (x == 0) return 0;
    // x = m * 2^e with 1 <= m < 2; ulp = 2^(e - 112)
    return scalbnq(1.0Q, ilogbq(x) - (FLT128_MANT_DIG - 1));
}

Real ulp_distance(Real a, Real b) {
    if (a == b) return 0;
    Real u = ulp_of(rabs(a) > rabs(b) ? a : b);
    return rabs(a - b) / u;
}

std::string format_real(Real x, int significant_digits) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", significant_digits, x);
    return buf;
}

}  // namespace primesum
