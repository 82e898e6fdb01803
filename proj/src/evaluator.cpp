#include "primesum/evaluator.hpp"

#include <stdexcept>
#include <string>

namespace primesum {

namespace {

void require_x_ge(Real x, Real lo, const char* who) {
    if (!(x >= lo))
        throw std::domain_error(std::string(who) + ": argument " + format_real(x) +
                                " below domain cutoff " + format_real(lo));
}

// Gauss-Legendre abscissae/weights on [-1, 1], nonnegative half (index 0 is
// the center node). 38 significant digits, ample for the 113-bit mantissa.
constexpr int kG7Pairs = 3;
const Real kG7Node[kG7Pairs + 1] = {
    0.0Q,
    0.40584515137739716690660641207696146335Q,
    0.74153118559939443986386477328078840707Q,
    0.9491079123427585245261896840478512624Q,
};
const Real kG7Weight[kG7Pairs + 1] = {
    0.41795918367346938775510204081632653061Q,
    0.38183005050511894495036977548897513388Q,
    0.27970539148927666790146777142377958249Q,
    0.12948496616886969327061143267908201833Q,
};

constexpr int kG15Pairs = 7;
const Real kG15Node[kG15Pairs + 1] = {
    0.0Q,
    0.20119409399743452230062830339459620781Q,
    0.39415134707756336989720737098104546836Q,
    0.57097217260853884753722673725391064124Q,
    0.72441773136017004741618605461393800963Q,
    0.84820658341042721620064832077421685137Q,
    0.93727339240070590430775894771020947124Q,
    0.98799251802048542848956571858661258115Q,
};
const Real kG15Weight[kG15Pairs + 1] = {
    0.20257824192556127288062019996751931484Q,
    0.19843148532711157645611832644383932482Q,
    0.18616100001556221102680056186642282451Q,
    0.16626920581699393355320086048120881113Q,
    0.13957067792615431444780479451102832252Q,
    0.10715922046717193501186954668586930342Q,
    0.070366047488108124709267416450667338467Q,
    0.030753241996117268354628393577204417722Q,
};

struct Panel {
    Real g15;
    Real error;  // |G15 - G7|
};

Panel evaluate_panel(const std::function<Real(Real)>& f, Real a, Real b) {
    Real mid = (a + b) / 2;
    Real half = (b - a) / 2;
    Real g7 = kG7Weight[0] * f(mid);
    for (int k = 1; k <= kG7Pairs; ++k) {
        Real d = half * kG7Node[k];
        g7 += kG7Weight[k] * (f(mid - d) + f(mid + d));
    }
    Real g15 = kG15Weight[0] * f(mid);
    for (int k = 1; k <= kG15Pairs; ++k) {
        Real d = half * kG15Node[k];
        g15 += kG15Weight[k] * (f(mid - d) + f(mid + d));
    }
    return {g15 * half, rabs((g15 - g7) * half)};
}

constexpr int kMinDepth = 2;
constexpr int kMaxDepth = 64;

Real integrate_recursive(const std::function<Real(Real)>& f, Real a, Real b, Real rel_tol,
                         int depth) {
    Panel p = evaluate_panel(f, a, b);
    if ((depth >= kMinDepth && p.error <= rel_tol * rabs(p.g15)) || depth >= kMaxDepth)
        return p.g15;
    Real mid = a + (b - a) / 2;
    return integrate_recursive(f, a, mid, rel_tol, depth + 1) +
           integrate_recursive(f, mid, b, rel_tol, depth + 1);
}

// li(2), the constant completing the principal-value integral below t = 2.
const Real kLiAtTwo = 1.045163780117Q;

}  // namespace

Real eval_g(Real x, const EvalContext&) {
    require_x_ge(x, 3, "eval_g");
    return rlog(x) + rlog(rlog(x)) - 1.5Q;
}

Real eval_h(Real x, int m, const EvalContext&) {
    require_x_ge(x, 3, "eval_h");
    if (m < 0) throw std::domain_error("eval_h: order must be >= 0");
    Real L = rlog(x);
    Real sum = 0;
    Real term = 1 / (2 * L);  // j = 1: 0!/(2 log x)
    for (int j = 1; j <= m; ++j) {
        sum += term;
        term = term * j / (2 * L);
    }
    return sum;
}

Real eval_c_m(Real x, int m, const EvalContext&) {
    require_x_ge(x, 3, "eval_c_m");
    if (m < 0) throw std::domain_error("eval_c_m: order must be >= 0");
    Real L = rlog(x);
    Real lam = rlog(L);
    return x * rpow_int(lam, m + 1) / rpow_int(L, m + 1);
}

Real integrate_adaptive(const std::function<Real(Real)>& f, Real a, Real b, Real rel_tol) {
    if (a == b) return 0;
    return integrate_recursive(f, a, b, rel_tol, 0);
}

Real li_quadrature(Real x, const EvalContext& ctx) {
    require_x_ge(x, 2, "li_quadrature");
    Real integral =
        integrate_adaptive([](Real t) { return 1 / rlog(t); }, 2, x, ctx.quad_rel_tol);
    return integral + kLiAtTwo;
}

LiSeries li_series(Real x, int terms, const EvalContext&) {
    if (!(x > 1)) throw std::domain_error("li_series: requires x > 1");
    if (terms < 1) throw std::domain_error("li_series: requires at least one term");
    Real L = rlog(x);
    Real sum = 0;
    Real term = x / L;  // j = 1: 0! * x / log x
    for (int j = 1; j <= terms; ++j) {
        sum += term;
        term = term * j / L;
    }
    return {sum, rabs(term)};  // after the loop: terms! * x / log^{terms+1} x
}

Real check_li_identity(Real a, Real x, const EvalContext& ctx) {
    if (!(a >= 2) || !(x >= a))
        throw std::domain_error("check_li_identity: requires x >= a >= 2");
    if (a == x) return 0;
    Real lhs = integrate_adaptive([](Real t) { return t / rlog(t); }, a, x, ctx.quad_rel_tol);
    Real rhs = li_quadrature(x * x, ctx) - li_quadrature(a * a, ctx);
    return rabs(lhs - rhs) / rabs(rhs);
}

SumApproxParts eval_sum_approx_parts(const Expansion& e, long long n, const EvalContext&) {
    if (n < 3) throw std::domain_error("eval_sum_approx: requires n >= 3");
    SumApproxParts parts;
    Real rn = static_cast<Real>(n);
    parts.log_n = rlog(rn);
    parts.loglog_n = rlog(parts.log_n);

    Real bracket = e.leading_log_terms ? parts.log_n + parts.loglog_n : Real(0);
    for (const auto& [k, poly] : e.terms) {
        Real value = poly.eval(parts.loglog_n);
        if (k > 0) value /= rpow_int(parts.log_n, k);
        parts.term_values.emplace(k, value);
        bracket += value;
    }
    parts.bracket = bracket;
    parts.value = rn * rn / 2 * bracket;
    return parts;
}

Real eval_sum_approx(const Expansion& e, long long n, const EvalContext& ctx) {
    return eval_sum_approx_parts(e, n, ctx).value;
}

}  // namespace primesum
