#include "primesum/expansion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace primesum {

const LogLogPoly& Expansion::term(int k) const {
    static const LogLogPoly zero;
    auto it = terms.find(k);
    return it == terms.end() ? zero : it->second;
}

Expansion assemble_expansion(const CipollaCoeffs& coeffs, int m) {
    CoeffTable table;
    return assemble_expansion(coeffs, m, table);
}

Expansion assemble_expansion(const CipollaCoeffs& coeffs, int m, CoeffTable& table) {
    if (m < 1) throw std::invalid_argument("assemble_expansion: order must be >= 1");
    if (coeffs.order < m)
        throw std::invalid_argument("assemble_expansion: coefficient table covers order " +
                                    std::to_string(coeffs.order) + " < requested " +
                                    std::to_string(m));

    std::map<int, LogLogPoly> terms;
    terms[0] = LogLogPoly::constant(Rational(-3, 2));
    for (int j = 1; j <= m; ++j)
        terms[j] = terms[j] - LogLogPoly::constant(rational_factorial(j - 1) / rational_pow2(j));

    for (int s = 1; s <= m; ++s) {
        Rational sign_over_s = Rational(s % 2 == 1 ? 1 : -1, s);
        for (int i = 0; i <= s; ++i) {
            const Rational& a_is = coeffs.at(i, s);
            for (int j = 0; j <= m - s; ++j) {
                Rational prefactor = a_is * sign_over_s / rational_pow2(j);
                for (int r = 0; r <= std::min(i, j); ++r) {
                    Rational contrib = prefactor * Rational(table.b_coeff(s, i, j, r));
                    if (contrib.is_zero()) continue;
                    terms[s + j] = terms[s + j] + LogLogPoly::monomial(i - r, contrib);
                }
            }
        }
    }

    Expansion e;
    e.order = m;
    e.leading_log_terms = true;
    for (auto& [k, poly] : terms)
        if (!poly.is_zero()) e.terms.emplace(k, std::move(poly));
    return e;
}

TsFamily extract_ts(const Expansion& e) {
    TsFamily family;
    family.order = e.order;
    for (int s = 1; s <= e.order; ++s) {
        LogLogPoly t = e.term(s).scale(Rational(s % 2 == 1 ? s : -s));
        if (t.degree() != s || t.coeff(s) != Rational(1))
            throw std::runtime_error(
                "extract_ts: T_" + std::to_string(s) + " = " + t.pretty_x() +
                " is not monic of degree " + std::to_string(s) +
                "; input coefficients are inconsistent");
        family.polys.push_back(std::move(t));
    }
    return family;
}

std::string render_expansion(const Expansion& e) {
    std::ostringstream os;
    os << "n^2/2 * ( ";
    if (e.leading_log_terms) os << "log n + loglog n";
    bool first = !e.leading_log_terms;
    for (const auto& [k, poly] : e.terms) {
        if (poly.is_zero()) continue;
        bool negate = poly.coeff(poly.degree()).sign() < 0;
        LogLogPoly shown = negate ? poly.scale(Rational(-1)) : poly;
        if (first) {
            if (negate) os << "-";
            first = false;
        } else {
            os << (negate ? " - " : " + ");
        }
        bool single_constant = shown.degree() == 0;
        if (k == 0 && single_constant) {
            os << shown.pretty_loglog();
        } else {
            os << "(" << shown.pretty_loglog() << ")";
            if (k == 1)
                os << "/log n";
            else if (k >= 2)
                os << "/log^" << k << " n";
        }
    }
    os << " )";
    return os.str();
}

std::string emit_term_csv(const Expansion& e) {
    std::ostringstream os;
    for (const auto& [k, poly] : e.terms) os << k << "," << poly.serialize() << "\n";
    return os.str();
}

}  // namespace primesum
