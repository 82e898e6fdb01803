#include <doctest.h>

#include <random>
#include <stdexcept>

#include "primesum/expansion.hpp"

using primesum::assemble_expansion;
using primesum::builtin_coeffs;
using primesum::CipollaCoeffs;
using primesum::Expansion;
using primesum::extract_ts;
using primesum::LogLogPoly;
using primesum::Rational;
using primesum::TsFamily;

namespace {

LogLogPoly poly(std::string_view csv) { return LogLogPoly::deserialize(csv); }

}  // namespace

TEST_CASE("assembled terms at order 1") {
    Expansion e = assemble_expansion(builtin_coeffs(1), 1);
    CHECK(e.order == 1);
    CHECK(e.leading_log_terms);
    CHECK(e.term(0) == poly("-3/2"));
    CHECK(e.term(1) == poly("-5/2,1"));
    CHECK(e.terms.size() == 2);
    CHECK(e.term(2).is_zero());  // absent key reads as zero
}

TEST_CASE("assembled terms at order 2") {
    Expansion e = assemble_expansion(builtin_coeffs(2), 2);
    CHECK(e.term(0) == poly("-3/2"));
    CHECK(e.term(1) == poly("-5/2,1"));
    // -(x^2 - 7x + 29/2)/2, the order-2 polynomial with its -1/2 prefactor
    CHECK(e.term(2) == poly("-29/4,7/2,-1/2"));
    CHECK(e.terms.size() == 3);
}

TEST_CASE("extracted polynomial family matches the closed forms") {
    TsFamily ts = extract_ts(assemble_expansion(builtin_coeffs(2), 2));
    REQUIRE(ts.order == 2);
    CHECK(ts.t(1) == poly("-5/2,1"));    // x - 5/2
    CHECK(ts.t(2) == poly("29/2,-7,1")); // x^2 - 7x + 29/2

    TsFamily first = extract_ts(assemble_expansion(builtin_coeffs(1), 1));
    REQUIRE(first.order == 1);
    CHECK(first.t(1) == poly("-5/2,1"));
}

TEST_CASE("difference against the earlier published polynomials") {
    // Sinha's variant gave T_1 = x - 3 and T_2 = x^2 - 7x + 27/2; the
    // discrepancy is a constant 1/2 resp. 1.
    TsFamily ts = extract_ts(assemble_expansion(builtin_coeffs(2), 2));
    CHECK(ts.t(1) - poly("-3,1") == poly("1/2"));
    CHECK(ts.t(2) - poly("27/2,-7,1") == poly("1"));
}

TEST_CASE("monicity holds for any valid coefficient set") {
    std::mt19937 rng(20240819);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 7);
    for (int trial = 0; trial < 20; ++trial) {
        CipollaCoeffs c;
        c.order = 3;
        for (int s = 1; s <= 3; ++s) {
            for (int i = 0; i < s; ++i) c.a[{i, s}] = Rational(num(rng), den(rng));
            c.a[{s, s}] = Rational(1);
        }
        TsFamily ts = extract_ts(assemble_expansion(c, 3));
        for (int s = 1; s <= 3; ++s) {
            CHECK(ts.t(s).degree() == s);
            CHECK(ts.t(s).coeff(s) == Rational(1));
        }
    }
}

TEST_CASE("non-monic input coefficients are detected") {
    CipollaCoeffs bad = builtin_coeffs(2);
    bad.a[{2, 2}] = Rational(2);  // violates the a(s,s) = 1 normalization
    CHECK_THROWS_AS(extract_ts(assemble_expansion(bad, 2)), std::runtime_error);
}

TEST_CASE("truncation coherence between orders") {
    Expansion e1 = assemble_expansion(builtin_coeffs(2), 1);
    Expansion e2 = assemble_expansion(builtin_coeffs(2), 2);
    // The order-1 assembly equals the order-2 assembly restricted to k <= 1:
    // the correction series' k <= 1 part and the (s, j) cells with s + j <= 1
    // coincide, and nothing else reaches those powers.
    for (int k = 0; k <= 1; ++k) CHECK(e1.term(k) == e2.term(k));
    CHECK(e1.terms.count(2) == 0);
    CHECK(e2.terms.count(2) == 1);
    // The s = 2 column of the coefficients is invisible at order 1.
    CHECK(assemble_expansion(builtin_coeffs(1), 1) == e1);
}

TEST_CASE("assembly validates its inputs") {
    CHECK_THROWS_AS(assemble_expansion(builtin_coeffs(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(assemble_expansion(builtin_coeffs(1), 2), std::invalid_argument);
}

TEST_CASE("assembly is deterministic") {
    Expansion a = assemble_expansion(builtin_coeffs(2), 2);
    Expansion b = assemble_expansion(builtin_coeffs(2), 2);
    CHECK(a == b);
    CHECK(render_expansion(a) == render_expansion(b));
}

TEST_CASE("rendering the closed form") {
    CHECK(render_expansion(assemble_expansion(builtin_coeffs(1), 1)) ==
          "n^2/2 * ( log n + loglog n - 3/2 + (loglog n - 5/2)/log n )");
    std::string two = render_expansion(assemble_expansion(builtin_coeffs(2), 2));
    CHECK(two ==
          "n^2/2 * ( log n + loglog n - 3/2 + (loglog n - 5/2)/log n"
          " - (1/2 loglog^2 n - 7/2 loglog n + 29/4)/log^2 n )");
    CHECK(two.find("- 3/2") != std::string::npos);
    CHECK(two.find("(loglog n - 5/2)/log n") != std::string::npos);

    Expansion bare;
    bare.order = 1;
    CHECK(render_expansion(bare) == "n^2/2 * ( log n + loglog n )");
}

TEST_CASE("term CSV emission") {
    CHECK(primesum::emit_term_csv(assemble_expansion(builtin_coeffs(2), 2)) ==
          "0,-3/2\n1,-5/2,1\n2,-29/4,7/2,-1/2\n");
}
