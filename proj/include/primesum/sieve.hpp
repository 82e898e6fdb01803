#pragma once

#include <cstddef>
#include <vector>

#include "primesum/rational.hpp"

namespace primesum {

// Exact running state after the first `count` primes.
struct PrimeSumCheckpoint {
    long long count = 0;               // n
    unsigned long long last_prime = 0; // p_n
    BigInt sum;                        // p_1 + ... + p_n, exact
};

bool operator==(const PrimeSumCheckpoint& a, const PrimeSumCheckpoint& b);

struct SieveConfig {
    // Odd numbers per segment; must be >= 1024. Results are identical for
    // every valid segment size (determinism contract).
    std::size_t segment_size = std::size_t{1} << 20;
};

// Exact sum of the first n primes by a segmented odd-only sieve. The upper
// bound for p_n starts from n(log n + loglog n) (valid for n >= 6) and
// doubles on shortfall, so correctness never depends on the estimate's
// tightness. Accumulation is 128-bit integer, converted to BigInt at
// checkpoints — never floating point. Out-of-memory is reported with the
// prime count reached.
PrimeSumCheckpoint sum_first_n_primes(long long n, const SieveConfig& cfg = {});

// One sieve pass emitting a checkpoint at each grid value (grid strictly
// increasing, all >= 1); element i equals sum_first_n_primes(grid[i]).
std::vector<PrimeSumCheckpoint> checkpoint_stream(const std::vector<long long>& n_grid,
                                                  const SieveConfig& cfg = {});

}  // namespace primesum
