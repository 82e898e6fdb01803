#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "primesum/rational.hpp"

namespace primesum {

// Coefficients a(i,s) of the Cipolla expansion of the n-th prime: p_n equals
// n times a series in 1/log n whose order-s numerator is the polynomial
// sum_i a(i,s) (loglog n)^i, with a(s,s) = 1 for every s. The built-in table
// covers orders 1 and 2; higher orders load from a coefficient file.
struct CipollaCoeffs {
    int order = 0;                              // truncation order m
    std::map<std::pair<int, int>, Rational> a;  // key (i, s), 0 <= i <= s <= order

    const Rational& at(int i, int s) const;

    bool operator==(const CipollaCoeffs&) const = default;
};

// Requested built-in order has no stored table.
class UnsupportedOrder : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Coefficient file failed validation; message names the offending entry.
class CoeffsFileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exact built-in coefficients for m in {1, 2}:
//   a(1,1) = 1, a(0,1) = -2;  additionally  a(2,2) = 1, a(1,2) = -6, a(0,2) = 11.
// Other m: throws UnsupportedOrder directing the caller to load_coeffs_file.
CipollaCoeffs builtin_coeffs(int m);

// Coefficient file format: line-oriented text, one "i s value" triple per
// line, rationals as p/q, '#' to end of line is a comment, blank lines
// ignored. Entries with s > m are skipped so one file can serve several
// orders. Validation requires every (i,s) with 0 <= i <= s <= m exactly
// once and a(s,s) = 1 after canonicalization; violations throw
// CoeffsFileError naming the entry.
CipollaCoeffs load_coeffs_file(const std::string& path, int m);
CipollaCoeffs parse_coeffs(std::istream& in, int m, const std::string& source_name);

// Deterministic dump in the file format above; load_coeffs round-trips it.
std::string format_coeffs(const CipollaCoeffs& coeffs);

}  // namespace primesum
