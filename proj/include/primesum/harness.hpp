#pragma once

#include <map>
#include <string>
#include <vector>

#include "primesum/cipolla.hpp"
#include "primesum/evaluator.hpp"
#include "primesum/sieve.hpp"

namespace primesum {

// One grid point of the empirical error sweep. normalized_error divides the
// absolute error by n * c_m(n) = n^2 (loglog n)^{m+1} / log^{m+1} n, the
// scale of the approximation's truncation term, so a bounded trend across
// decades is the expected signature of a correct expansion.
struct OrderMetrics {
    Real approx = 0;
    Real abs_error = 0;
    Real rel_error = 0;         // abs_error / exact_sum
    Real normalized_error = 0;  // abs_error / (n * c_m(n))
};

struct ErrorRecord {
    long long n = 0;
    BigInt exact_sum;
    std::map<int, OrderMetrics> by_order;  // key: truncation order m
};

struct SweepConfig {
    SieveConfig sieve;
    EvalContext eval;
};

// {10^4, 3*10^4, 10^5, 3*10^5, 10^6, 3*10^6, 10^7}: log-spaced, sieve pass in
// seconds on commodity hardware.
std::vector<long long> default_sweep_grid();

// Exact sums from a single sieve pass over the grid; approximations per
// order. Grid must be strictly increasing with every n >= 3; every order must
// be >= 1 and covered by `coeffs`.
std::vector<ErrorRecord> run_error_sweep(const std::vector<long long>& n_grid,
                                         const std::vector<int>& orders,
                                         const CipollaCoeffs& coeffs,
                                         const SweepConfig& cfg = {});

enum class ReportFormat { csv, aligned_table };

// CSV schema: n,exact_sum,m,approx,abs_error,rel_error,normalized_error —
// one row per (n, m), 15 significant digits for reals, exact integers for
// exact_sum. aligned_table is the same data padded for terminals. Output is
// byte-deterministic.
std::string emit_report(const std::vector<ErrorRecord>& records, ReportFormat format);

}  // namespace primesum
