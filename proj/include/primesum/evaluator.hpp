#pragma once

#include <functional>
#include <map>

#include "primesum/expansion.hpp"
#include "primesum/real.hpp"

namespace primesum {

// Numeric evaluation settings. The working real type carries a 113-bit
// mantissa; quadrature refines until each panel's error estimate falls below
// quad_rel_tol relative to the panel value.
struct EvalContext {
    Real quad_rel_tol = 1e-12;
    int mantissa_bits = FLT128_MANT_DIG;
};

// log x + loglog x - 3/2; requires x >= 3 so loglog x > 0.
Real eval_g(Real x, const EvalContext& ctx);

// sum_{j=1}^{m} (j-1)!/(2^j log^j x); requires x >= 3, m >= 0.
Real eval_h(Real x, int m, const EvalContext& ctx);

// x (loglog x)^{m+1} / log^{m+1} x, the error-normalization scale; x >= 3.
Real eval_c_m(Real x, int m, const EvalContext& ctx);

// Adaptive bisection quadrature of f over [a, b] using paired 7- and 15-point
// Gauss-Legendre rules; |G15 - G7| is the panel error estimate, accepted when
// below rel_tol * |panel value| (valid acceptance test for one-signed smooth
// integrands, which is all this project integrates). Panels split at least
// twice and at most 64 times.
Real integrate_adaptive(const std::function<Real(Real)>& f, Real a, Real b, Real rel_tol);

// Logarithmic integral li(x) = integral_2^x dt/log t + li(2), with the
// pinned constant li(2) = 1.045163780117; requires x >= 2.
Real li_quadrature(Real x, const EvalContext& ctx);

// Truncated asymptotic series for li: value = x * sum_{j=1}^{n} (j-1)!/log^j x
// with the heuristic error bound n! * x / log^{n+1} x (size of the first
// omitted term). The series diverges for fixed x as n grows; the bound is
// reported, never asserted.
struct LiSeries {
    Real value;
    Real error_bound;
};
LiSeries li_series(Real x, int terms, const EvalContext& ctx);

// Relative discrepancy between integral_a^x t dt/log t and li(x^2) - li(a^2),
// which agree exactly in the limit (substitute u = t^2). Requires x >= a >= 2;
// returns exactly 0 when a == x.
Real check_li_identity(Real a, Real x, const EvalContext& ctx);

// S_m(n) = n^2/2 * ( log n + loglog n + sum_k terms[k](loglog n)/log^k n ),
// with the parenthesised bracket accumulated in ascending k. Requires n >= 3.
struct SumApproxParts {
    Real log_n;
    Real loglog_n;
    std::map<int, Real> term_values;  // k -> terms[k](loglog n) / log^k n
    Real bracket;
    Real value;
};
SumApproxParts eval_sum_approx_parts(const Expansion& e, long long n, const EvalContext& ctx);
Real eval_sum_approx(const Expansion& e, long long n, const EvalContext& ctx);

}  // namespace primesum
