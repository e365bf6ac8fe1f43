#include <string>
#include <vector>

#include "doctest.h"
#include "qtheta/expr.hpp"
#include "qtheta/mock.hpp"
#include "qtheta/thetas.hpp"

using namespace qtheta;

TEST_CASE("expand matches the direct constructors") {
    CHECK(expand_expr("psi", 6).str() == "1 + q + q^3 + q^6 + O(q^7)");
    CHECK(expand_expr("J(1,2)", 8) == Jm(1, 8).pow(2) / Jm(2, 8));
    CHECK(expand_expr("j(1,0,1)", 12).is_zero());
    CHECK(expand_expr("phi", 10) == phi(10));
    CHECK(expand_expr("Jbar(1,2)", 10) == Jbar(1, 2, 10));
    CHECK(expand_expr("Jm(3)", 10) == Jm(3, 10));
    CHECK(expand_expr("J(3)", 10) == Jm(3, 10));
    CHECK(expand_expr("j(zeta, 1, 2)", 10) == theta_j({{Cyc::zeta_pow(1), 1}, 2}, 10));
    CHECK(expand_expr("g(zeta^2, 0)", 10) == g_mock({Cyc::zeta_pow(2), 0}, 10));
    CHECK(expand_expr("g(-1, 1, 4)", 10) == g_mock({Cyc(-1), 1}, 10, 4));
    CHECK(expand_expr("G(i)", 10) == G_rank({Cyc::embed("i"), 0}, 10));
    CHECK(expand_expr("G(zeta, 1)", 10) == G_rank({Cyc::zeta_pow(1), 1}, 10));
    CHECK(expand_expr("f(sqrt2)", 10) == f_a(Cyc::embed("sqrt2"), 10));
    CHECK(expand_expr("m(zeta^-3, 1, 3, zeta^3, 0)", 10) ==
          appell_m({{Cyc::zeta_pow(1).pow(-3), 1}, {Cyc::zeta_pow(3), 0}, 3}, 10));
    CHECK(expand_expr("poch(-1, 1, 2)", 10) == pochhammer_inf({Cyc(-1), 1}, 2, 10));
    CHECK(expand_expr("subst(psi, 2)", 14) == psi(7).subst_q_power(2).truncate(14));
    CHECK(expand_expr("twist(J(1), -1)", 10) == Jm(1, 10).twist(Cyc(-1)));
}

TEST_CASE("scalar arithmetic and operator grammar") {
    CHECK(expand_expr("1/2 + 1/3", 5) == QSeries::monomial({Cyc(Rational(5, 6)), 0}, 5));
    CHECK(expand_expr("zeta^6", 5) == QSeries::monomial({Cyc::embed("i"), 0}, 5));
    CHECK(expand_expr("alpha^2", 5) == QSeries::monomial({Cyc::embed("i"), 0}, 5));
    CHECK(expand_expr("sqrt2*sqrt3 - zeta - zeta^-1", 5) ==
          QSeries::monomial({Cyc::zeta_pow(5) + Cyc::zeta_pow(-5), 0}, 5));
    CHECK(expand_expr("q^-2", 6) == QSeries::monomial({Cyc(1), -2}, 6));
    CHECK(expand_expr("(1+q)^3", 6) ==
          (QSeries::one(6) + QSeries::q_power(1, 6)).pow(3));
    CHECK(expand_expr("1/(1-q)", 6) == geom_factor_inverse({Cyc(1), 1}, 6));
    CHECK(expand_expr("-q*-q", 6) == QSeries::q_power(2, 6));
    CHECK(expand_expr("2^-1", 4) == QSeries::monomial({Cyc(Rational(1, 2)), 0}, 4));
}

TEST_CASE("print then parse evaluates identically") {
    std::vector<std::string> samples = {
        "psi",
        "J(1,2)",
        "j(zeta, 1, 2) * phi - 3/4",
        "g(zeta^2, 0) + G(i)/J(1)",
        "m(zeta^-3, 1, 3, zeta^3, 0)",
        "subst(twist(psi, -1), 2)^2",
        "-(q + 1)^3/(1 - q)",
        "poch(-1, 1, 2) - q^-2",
    };
    for (const std::string& text : samples) {
        CAPTURE(text);
        ExprPtr node = parse_expr(text);
        std::string printed = expr_to_string(node);
        CAPTURE(printed);
        CHECK(expand_expr(printed, 14) == expand_expr(text, 14));
    }
}

TEST_CASE("parse errors carry positions, bad arguments are typed") {
    auto code_of = [](const std::string& text, long order) {
        try {
            (void)expand_expr(text, order);
        } catch (const Error& err) {
            return err.code();
        }
        return ErrorCode::ZeroInverse;  // sentinel: nothing below expects this
    };
    CHECK(code_of("2 +", 5) == ErrorCode::ParseError);
    CHECK(code_of("foo(3)", 5) == ErrorCode::ParseError);
    CHECK(code_of("zeta^", 5) == ErrorCode::ParseError);
    CHECK(code_of("(1+q", 5) == ErrorCode::ParseError);
    CHECK(code_of("1 $ 2", 5) == ErrorCode::ParseError);
    CHECK(code_of("j(q, 1, 1)", 5) == ErrorCode::BadArgument);
    CHECK(code_of("J(1,2,3)", 5) == ErrorCode::BadArgument);
    CHECK(code_of("f(1/3, 2)", 5) == ErrorCode::BadArgument);
    CHECK(code_of("subst(psi, 0)", 5) == ErrorCode::BadArgument);
    CHECK(code_of("g(1/2, q)", 5) == ErrorCode::BadArgument);

    try {
        (void)expand_expr("2 + * 3", 5);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(std::string(err.what()).find("position 4") != std::string::npos);
    }

    try {
        (void)expand_expr("G(1, -1)", 12);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.genericity_violation());
    }
}

TEST_CASE("monomial_from_expr accepts exactly one term") {
    Monomial a = monomial_from_expr("zeta^6");
    CHECK(a.c == Cyc::embed("i"));
    CHECK(a.e == 0);
    Monomial b = monomial_from_expr("-q^3*alpha");
    CHECK(b.c == -Cyc::embed("alpha"));
    CHECK(b.e == 3);
    Monomial c = monomial_from_expr("(1+zeta)*q");
    CHECK(c.c == Cyc(1) + Cyc::zeta_pow(1));
    CHECK(c.e == 1);
    CHECK_THROWS_AS((void)monomial_from_expr("q + 1"), Error);
    CHECK_THROWS_AS((void)monomial_from_expr("0"), Error);
    CHECK_THROWS_AS((void)monomial_from_expr("psi"), Error);
}
