#include "primesum/sieve.hpp"

#include <cmath>
#include <new>
#include <stdexcept>
#include <string>

namespace primesum {

bool operator==(const PrimeSumCheckpoint& a, const PrimeSumCheckpoint& b) {
    return a.count == b.count && a.last_prime == b.last_prime && a.sum == b.sum;
}

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

// Rigorous upper bound for p_n (n >= 6), with slack so tiny n need no retry.
u64 nth_prime_bound(long long n) {
    if (n < 6) return 16;
    double d = static_cast<double>(n);
    return static_cast<u64>(d * (std::log(d) + std::log(std::log(d)))) + 16;
}

// Odd primes up to `limit` by a monolithic odd-only sieve.
std::vector<u64> odd_primes_upto(u64 limit) {
    std::vector<u64> primes;
    if (limit < 3) return primes;
    std::size_t count = static_cast<std::size_t>((limit - 3) / 2 + 1);  // odds 3,5,...,<=limit
    std::vector<bool> composite(count, false);
    for (std::size_t idx = 0; idx < count; ++idx) {
        if (composite[idx]) continue;
        u64 p = 3 + 2 * static_cast<u64>(idx);
        primes.push_back(p);
        if (p * p > limit) continue;
        for (u64 multiple = p * p; multiple <= limit; multiple += 2 * p)
            composite[static_cast<std::size_t>((multiple - 3) / 2)] = true;
    }
    return primes;
}

u64 isqrt_ceil(u64 x) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
    while (r * r < x) ++r;
    return r;
}

}  // namespace

std::vector<PrimeSumCheckpoint> checkpoint_stream(const std::vector<long long>& n_grid,
                                                  const SieveConfig& cfg) {
    if (cfg.segment_size < 1024)
        throw std::invalid_argument("sieve: segment_size must be >= 1024 odd numbers");
    if (n_grid.empty()) return {};
    long long prev = 0;
    for (long long n : n_grid) {
        if (n <= prev)
            throw std::invalid_argument("sieve: checkpoint grid must be strictly increasing and >= 1");
        prev = n;
    }

    const long long target = n_grid.back();
    std::vector<PrimeSumCheckpoint> checkpoints;
    checkpoints.reserve(n_grid.size());
    std::size_t grid_pos = 0;

    long long count = 0;
    u128 sum = 0;
    auto take_prime = [&](u64 p) {
        ++count;
        sum += p;
        if (grid_pos < n_grid.size() && count == n_grid[grid_pos]) {
            checkpoints.push_back({count, p, bigint_from_u128(sum)});
            ++grid_pos;
        }
    };

    try {
        take_prime(2);
        u64 bound = nth_prime_bound(target);
        std::vector<u64> base = odd_primes_upto(isqrt_ceil(bound));
        std::vector<bool> composite;

        u64 low = 3;  // first odd value of the current segment
        while (count < target) {
            if (low > bound) {
                bound *= 2;  // estimate fell short; retry with more room
                base = odd_primes_upto(isqrt_ceil(bound));
            }
            u64 high = low + 2 * (static_cast<u64>(cfg.segment_size) - 1);
            if (high > bound) high = bound | 1;  // last odd value <= bound (bound >= 3 here)
            std::size_t len = static_cast<std::size_t>((high - low) / 2 + 1);
            composite.assign(len, false);

            for (u64 p : base) {
                if (p * p > high) break;
                u64 start = p * p;
                if (start < low) {
                    u64 first = (low + p - 1) / p * p;
                    if (first % 2 == 0) first += p;
                    start = first;
                }
                for (u64 multiple = start; multiple <= high; multiple += 2 * p)
                    composite[static_cast<std::size_t>((multiple - low) / 2)] = true;
            }

            for (std::size_t idx = 0; idx < len && count < target; ++idx)
                if (!composite[idx]) take_prime(low + 2 * static_cast<u64>(idx));
            low = high + 2;
        }
    } catch (const std::bad_alloc&) {
        throw std::runtime_error("sieve: out of memory after reaching prime count " +
                                 std::to_string(count));
    }
    return checkpoints;
}

PrimeSumCheckpoint sum_first_n_primes(long long n, const SieveConfig& cfg) {
    return checkpoint_stream({n}, cfg).front();
}

}  // namespace primesum
