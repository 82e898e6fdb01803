#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "primesum/rational.hpp"
#include "primesum/real.hpp"

namespace primesum {

// Dense univariate polynomial over Q in the variable loglog n. Coefficient k
// multiplies (loglog n)^k. Canonical form: no trailing zero coefficients; the
// zero polynomial is the empty coefficient list.
class LogLogPoly {
  public:
    LogLogPoly() = default;  // zero polynomial
    explicit LogLogPoly(std::vector<Rational> coeffs);

    static LogLogPoly constant(Rational c);
    static LogLogPoly monomial(int degree, Rational c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const Rational& coeff(int k) const;  // 0 beyond the degree
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend LogLogPoly operator+(const LogLogPoly& p, const LogLogPoly& q);
    friend LogLogPoly operator-(const LogLogPoly& p, const LogLogPoly& q);
    LogLogPoly scale(const Rational& c) const;

    // Horner; coefficients enter the float domain only here.
    Real eval(Real x) const;

    bool operator==(const LogLogPoly&) const = default;

    // Lowest-degree-first comma-separated rationals, e.g. "-5/2,1"; zero -> "0".
    std::string serialize() const;
    static LogLogPoly deserialize(std::string_view text);

    // Human form, highest degree first. `monomial_name(d)` renders the variable
    // part for degree d >= 1 (e.g. "x^2" or "loglog^2 n"); `tight` glues
    // coefficient and variable ("7x") instead of spacing them ("7/2 loglog n").
    std::string pretty(const std::function<std::string(int)>& monomial_name, bool tight) const;

    // Convenience renderers for the two variable styles used by the CLI.
    std::string pretty_x() const;
    std::string pretty_loglog() const;

  private:
    std::vector<Rational> coeffs_;
};

}  // namespace primesum
