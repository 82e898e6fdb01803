#include "primesum/coeff_engine.hpp"

#include <stdexcept>
#include <string>

namespace primesum {

namespace {

std::string key_str(const CoeffKey& k) {
    return "(s=" + std::to_string(k.s) + ", i=" + std::to_string(k.i) +
           ", j=" + std::to_string(k.j) + ", r=" + std::to_string(k.r) + ")";
}

}  // namespace

const BigInt& CoeffTable::b_coeff(const CoeffKey& key) {
    if (key.s < 0 || key.i < 0 || key.j < 0 || key.r < 0)
        throw std::domain_error("b_coeff: negative index in " + key_str(key));
    if (key.r > key.j)
        throw std::domain_error("b_coeff: key " + key_str(key) +
                                " outside domain (requires j >= r)");
    return compute(key);
}

const BigInt& CoeffTable::compute(const CoeffKey& k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;

    BigInt value;
    if (use_vanishing_shortcut_ && k.r > k.i) {
        value = 0;
    } else if (k.j == 0) {
        value = 1;  // j = r = 0 base case
    } else if (k.r == k.j) {
        value = compute(CoeffKey{k.s, k.i, k.j - 1, k.j - 1}) * BigInt(-(k.i - (k.j - 1)));
    } else if (k.r == 0) {
        value = compute(CoeffKey{k.s, k.i, k.j - 1, 0}) * BigInt(k.s + k.j - 1);
    } else {
        value = compute(CoeffKey{k.s, k.i, k.j - 1, k.r}) * BigInt(k.s + k.j - 1) +
                compute(CoeffKey{k.s, k.i, k.j - 1, k.r - 1}) * BigInt(-(k.i - (k.r - 1)));
    }
    return memo_.emplace(k, std::move(value)).first->second;
}

std::vector<std::pair<CoeffKey, BigInt>> CoeffTable::dump(int s_max, int i_max, int j_max) {
    if (s_max < 0 || i_max < 0 || j_max < 0)
        throw std::domain_error("coeff_table_dump: bounds must be >= 0");
    std::vector<std::pair<CoeffKey, BigInt>> out;
    for (int s = 0; s <= s_max; ++s)
        for (int i = 0; i <= i_max; ++i)
            for (int j = 0; j <= j_max; ++j)
                for (int r = 0; r <= j; ++r) {
                    CoeffKey key{s, i, j, r};
                    out.emplace_back(key, b_coeff(key));
                }
    return out;
}

}  // namespace primesum
