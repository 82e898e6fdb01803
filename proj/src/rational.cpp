#include "primesum/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace primesum {

BigInt bigint_from_u128(unsigned __int128 v) {
    BigInt hi(static_cast<unsigned long>(v >> 64));
    BigInt lo(static_cast<unsigned long>(v));
    return (hi << 64) + lo;
}

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ /= mpq_class(den);
}

namespace {

bool valid_integer_token(std::string_view t) {
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("Rational: malformed value '" + std::string(text) + "'");
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den)) throw bad();
    if (num.front() == '+') num.remove_prefix(1);  // GMP rejects a leading '+'
    if (den.front() == '+') den.remove_prefix(1);
    BigInt n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational rational_factorial(int n) {
    if (n < 0) throw std::invalid_argument("rational_factorial: negative argument");
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational rational_pow2(int k) {
    if (k < 0) throw std::invalid_argument("rational_pow2: negative exponent");
    BigInt p = BigInt(1) << k;
    return Rational(p);
}

}  // namespace primesum
