#include "primesum/sieve_reference.hpp"

#include <stdexcept>

namespace primesum {

namespace {

bool is_prime_trial(unsigned long long v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (unsigned long long d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

}  // namespace

PrimeSumCheckpoint sum_first_n_primes_naive(long long n) {
    if (n < 1) throw std::invalid_argument("naive sieve: n must be >= 1");
    PrimeSumCheckpoint cp;
    unsigned __int128 sum = 0;
    for (unsigned long long candidate = 2; cp.count < n; ++candidate) {
        if (!is_prime_trial(candidate)) continue;
        ++cp.count;
        cp.last_prime = candidate;
        sum += candidate;
    }
    cp.sum = bigint_from_u128(sum);
    return cp;
}

}  // namespace primesum
