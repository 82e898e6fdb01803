#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "primesum/rational.hpp"

namespace primesum {

// Index quadruple (s,i,j,r) of the integer coefficient family b(s,i,j,r).
// Valid keys have all indices >= 0 and j >= r.
struct CoeffKey {
    int s = 0;
    int i = 0;
    int j = 0;
    int r = 0;

    auto operator<=>(const CoeffKey&) const = default;
};

// Memoized table of the integers b(s,i,j,r), defined on j >= r by the
// four-branch recurrence
//
//   b(s,i,0,0) = 1
//   b(s,i,j,j) = b(s,i,j-1,j-1) * (-(i-(j-1)))                      (diagonal)
//   b(s,i,j,0) = b(s,i,j-1,0) * (s+j-1)                             (edge)
//   b(s,i,j,r) = b(s,i,j-1,r)*(s+j-1) + b(s,i,j-1,r-1)*(-(i-(r-1)))  (j > r >= 1)
//
// Keys with r > j lie outside the domain and are rejected. Keys with r > i
// evaluate to exactly zero; that fact is used as a short-circuit, which tests
// can disable to exercise the raw recursion. Values grow factorially in j via
// the edge branch, hence arbitrary-precision integers.
//
// One table per computation, owned by the caller. Single-writer while
// filling; immutable and shareable once filled.
class CoeffTable {
  public:
    explicit CoeffTable(bool use_vanishing_shortcut = true)
        : use_vanishing_shortcut_(use_vanishing_shortcut) {}

    // Returns b(key), memoizing every intermediate value. Throws
    // std::domain_error for negative indices or r > j.
    const BigInt& b_coeff(const CoeffKey& key);
    const BigInt& b_coeff(int s, int i, int j, int r) { return b_coeff(CoeffKey{s, i, j, r}); }

    // All valid keys with s <= s_max, i <= i_max, r <= j <= j_max, in
    // lexicographic (s,i,j,r) order.
    std::vector<std::pair<CoeffKey, BigInt>> dump(int s_max, int i_max, int j_max);

    std::size_t memo_size() const { return memo_.size(); }

  private:
    const BigInt& compute(const CoeffKey& key);

    std::map<CoeffKey, BigInt> memo_;
    bool use_vanishing_shortcut_;
};

}  // namespace primesum
