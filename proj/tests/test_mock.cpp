#include "doctest.h"

#include <vector>

#include "qtheta/mock.hpp"

using namespace qtheta;

namespace {

Cyc half(long num) { return Cyc(Rational(num, 2)); }

}  // namespace

TEST_CASE("rank generating function at x = 1 counts partitions") {
    // Durfee-square decomposition: G(1, q) = 1 / (q; q)_inf
    QSeries g = G_rank({Cyc(1), 0}, 10);
    std::vector<long> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n) CHECK(g.coeff(n) == Cyc(p[static_cast<size_t>(n)]));
    CHECK(g == Jm(1, 10).invert());
}

TEST_CASE("universal mock theta at x = -1 matches a hand expansion") {
    QSeries g = g_mock({Cyc(-1), 0}, 5);
    CHECK(g.coeff(0) == half(1));
    CHECK(g.coeff(1) == half(-1));
    CHECK(g.coeff(2) == Cyc(1));
    CHECK(g.coeff(3) == half(-3));
    CHECK(g.coeff(4) == half(3));
    CHECK(g.coeff(5) == half(-3));
}

TEST_CASE("trinomial family matches hand expansion and its rank specializations") {
    QSeries f1 = f_a(Cyc(1), 6);
    std::vector<long> expected = {1, 1, -1, 0, 2, -2, -1};
    for (long n = 0; n <= 6; ++n) CHECK(f1.coeff(n) == Cyc(expected[static_cast<size_t>(n)]));

    long N = 30;
    // 1 + a q^k + q^{2k} = (1 - c q^k)(1 - c^{-1} q^k) whenever c + c^{-1} = -a
    CHECK(f_a(Cyc(0), N) == G_rank({Cyc::embed("i"), 0}, N));
    CHECK(f_a(Cyc(1), N) == G_rank({Cyc::embed("omega"), 0}, N));
    CHECK(f_a(Cyc(-1), N) == G_rank({-Cyc::embed("omega"), 0}, N));
    CHECK(f_a(Cyc::embed("sqrt2"), N) == G_rank({-Cyc::embed("alpha"), 0}, N));
    CHECK(f_a(Cyc::embed("sqrt3"), N) == G_rank({-Cyc::zeta_pow(2), 0}, N));
}

TEST_CASE("rank function factors through the mock theta") {
    // G(x, q) = (1 - x)(x g(x; q) + 1)
    long N = 30;
    std::vector<Monomial> samples = {{Cyc::embed("i"), 0},   {Cyc::embed("alpha"), 0},
                                     {-Cyc::embed("alpha"), 0}, {Cyc::zeta_pow(1), 0},
                                     {Cyc::zeta_pow(2), 0},  {-Cyc::zeta_pow(2), 0},
                                     {Cyc::zeta_pow(1), 1}};
    for (const Monomial& x : samples) {
        QSeries lhs = G_rank(x, N);
        QSeries one_minus_x = QSeries::one(N) - QSeries::monomial(x, N);
        QSeries rhs = one_minus_x * (QSeries::monomial(x, N) * g_mock(x, N) + QSeries::one(N));
        INFO("x = ", x.str());
        CHECK(lhs == rhs.truncate(lhs.order() < rhs.order() ? lhs.order() : rhs.order()));
    }
}

TEST_CASE("twisted evaluations reduce to coefficient twists") {
    long N = 24;
    Cyc i = Cyc::embed("i");
    // scalar argument: evaluation at uq is a plain twist
    CHECK(G_rank_twisted({i, 0}, Cyc(-1), N) == G_rank({i, 0}, N).twist(Cyc(-1)));
    CHECK(g_mock_twisted({i, 0}, Cyc(-1), 1, N) == g_mock({i, 0}, N).twist(Cyc(-1)));
    // u = 1 is the identity
    CHECK(G_rank_twisted({Cyc::zeta_pow(5), 2}, Cyc(1), N) == G_rank({Cyc::zeta_pow(5), 2}, N));
    // monomial argument: both functions must pull the same u^{-e} through,
    // since G(x, uq) = (1 - x)(x g(x; uq) + 1) holds verbatim at base uq
    Monomial x{Cyc::zeta_pow(1), 2};
    QSeries lhs = G_rank_twisted(x, i, N);
    QSeries rhs = (QSeries::one(N) - QSeries::monomial(x, N)) *
                  (QSeries::monomial(x, N) * g_mock_twisted(x, i, 1, N) + QSeries::one(N));
    CHECK(lhs == rhs.truncate(lhs.order() < rhs.order() ? lhs.order() : rhs.order()));
}

TEST_CASE("appell-lerch sum reproduces the universal mock theta") {
    // g(x; q) = -x^{-2} m(q x^{-3}, q^3, x^3) - x^{-1} m(q^2 x^{-3}, q^3, x^3)
    //           + J3^3 / (J1 j(x^3; q^3))
    long N = 20;
    Cyc x = Cyc::zeta_pow(2);
    Cyc x3 = x.pow(3);
    QSeries m1 = appell_m({{x.pow(-3), 1}, {x3, 0}, 3}, N);
    QSeries m2 = appell_m({{x.pow(-3), 2}, {x3, 0}, 3}, N);
    QSeries theta_term = Jm(3, N).pow(3) *
                         (Jm(1, N) * theta_j({Monomial{x3, 0}, 3}, N)).invert();
    QSeries rhs = -x.pow(-2) * m1 - x.pow(-1) * m2 + theta_term;
    QSeries lhs = g_mock({x, 0}, N);
    CHECK(lhs == rhs.truncate(lhs.order() < rhs.order() ? lhs.order() : rhs.order()));
}

TEST_CASE("appell-lerch window sizing is order stable") {
    AppellSpec spec{{Cyc::zeta_pow(1), 2}, {Cyc::zeta_pow(5), -1}, 2};
    QSeries wide = appell_m(spec, 35);
    QSeries narrow = appell_m(spec, 15);
    CHECK(narrow == wide.truncate(narrow.order() < 15 ? narrow.order() : 15L));
}

TEST_CASE("laurent arguments stay consistent under order changes") {
    Monomial x{Cyc::zeta_pow(1), -1};
    CHECK(g_mock(x, 18) == g_mock(x, 36).truncate(g_mock(x, 18).order()));
    CHECK(G_rank(x, 18) == G_rank(x, 36).truncate(G_rank(x, 18).order()));
}

TEST_CASE("non-generic arguments raise instead of silently degrading") {
    CHECK_THROWS_WITH_AS(static_cast<void>(g_mock({Cyc(1), 0}, 10)), doctest::Contains("pole"),
                         Error);
    CHECK_THROWS_AS(static_cast<void>(G_rank({Cyc(1), -1}, 10)), Error);
    CHECK_THROWS_AS(static_cast<void>(g_mock({Cyc::embed("i"), 0}, 10, 0)), Error);
    // z = 1 kills the theta divisor of the appell sum
    CHECK_THROWS_AS(static_cast<void>(appell_m({{Cyc::embed("i"), 0}, {Cyc(1), 0}, 1}, 10)),
                    Error);
    // x z an integral power of the base hits a pole in the bilateral sum
    CHECK_THROWS_AS(static_cast<void>(appell_m({{Cyc(1), 1}, {Cyc(1), -1}, 1}, 10)), Error);
    // genericity classification is visible to callers
    try {
        static_cast<void>(g_mock({Cyc(1), 0}, 10));
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.genericity_violation());
    }
}

TEST_CASE("theta valuation helper agrees with expansion") {
    ThetaSpec a{{Cyc::zeta_pow(1), -2}, 3};
    CHECK(theta_j_valuation(a) == theta_j(a, 10).valuation());
    ThetaSpec b{{Cyc::zeta_pow(7), 9}, 2};
    CHECK(theta_j_valuation(b) == theta_j(b, 10).valuation());
    CHECK_THROWS_AS(static_cast<void>(theta_j_valuation({{Cyc(1), 1}, 1})), Error);
}
