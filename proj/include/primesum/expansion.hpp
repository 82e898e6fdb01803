#pragma once

#include <map>
#include <string>
#include <vector>

#include "primesum/cipolla.hpp"
#include "primesum/coeff_engine.hpp"
#include "primesum/polynomial.hpp"

namespace primesum {

// Symbolic form of the prime-sum approximation's bracket: the full expression
// is n^2/2 * ( log n + loglog n + sum_k terms[k] / log^k n ) where each
// terms[k] is a polynomial in loglog n. The leading "log n + loglog n" is not
// a rational multiple of any loglog^i n / log^k n, so it is carried as a flag
// rather than a stored term; k = 0 holds only the constant beyond it (-3/2
// for the standard assembly).
struct Expansion {
    int order = 0;                   // truncation order m; no term has k > order
    bool leading_log_terms = true;   // implicit "log n + loglog n"
    std::map<int, LogLogPoly> terms; // k (power of 1/log n) -> polynomial, zero polys pruned

    // terms[k], or the zero polynomial when absent.
    const LogLogPoly& term(int k) const;

    bool operator==(const Expansion&) const = default;
};

// The monic polynomial family T_s recovered from an Expansion:
// terms[s] = (-1)^{s+1}/s * T_s, so T_s = terms[s] * s * (-1)^{s+1}.
struct TsFamily {
    int order = 0;
    std::vector<LogLogPoly> polys;  // polys[s-1] = T_s, monic of degree s

    const LogLogPoly& t(int s) const { return polys.at(static_cast<size_t>(s) - 1); }
};

// Exact symbolic assembly at truncation order m (requires coeffs.order >= m,
// m >= 1). Starting from the constant -3/2 at k = 0, subtracts the correction
// series sum_{j=1}^m (j-1)!/(2^j log^j n), then adds for every
// (s, i, j, r) with 1 <= s <= m, 0 <= i <= s, 0 <= j <= m-s, 0 <= r <= min(i,j)
// the rational a(i,s) * b(s,i,j,r) * (-1)^{s+1} / (s * 2^j) to the
// loglog^{i-r} coefficient of terms[s+j]. Contributions with s + j > m fall
// inside the truncation error and are never generated. All arithmetic exact.
Expansion assemble_expansion(const CipollaCoeffs& coeffs, int m);
Expansion assemble_expansion(const CipollaCoeffs& coeffs, int m, CoeffTable& table);

// Recovers T_1..T_m and verifies each is monic of degree s; a violation
// signals inconsistent input coefficients and throws std::runtime_error.
TsFamily extract_ts(const Expansion& e);

// Deterministic human-readable closed form, e.g. for order 1:
//   n^2/2 * ( log n + loglog n - 3/2 + (loglog n - 5/2)/log n )
// Terms with a negative leading coefficient render as "- (...)".
std::string render_expansion(const Expansion& e);

// One line per stored term, ascending k: "k,c0,c1,..." with the polynomial
// serialized lowest-degree-first.
std::string emit_term_csv(const Expansion& e);

}  // namespace primesum
