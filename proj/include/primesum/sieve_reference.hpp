#pragma once

#include "primesum/sieve.hpp"

namespace primesum {

// Independent ground-truth cross-check: sums the first n primes by plain
// trial division. Quadratic-ish and meant for n up to ~10^4, where it backs
// the segmented sieve's self-test.
PrimeSumCheckpoint sum_first_n_primes_naive(long long n);

}  // namespace primesum
