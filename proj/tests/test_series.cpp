#include "qtheta/series.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using namespace qtheta;

namespace {

const Cyc kI = Cyc::embed("i");

QSeries random_series(std::mt19937& rng, long order) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> zp(0, 23);
    std::uniform_int_distribution<long> val(-3, 3);
    const long v = val(rng);
    QSeries f = QSeries::zero(order);
    for (long n = v; n <= order; ++n) {
        const int c = coef(rng);
        if (c == 0) continue;
        f = f + QSeries::monomial({Cyc(c) * Cyc::zeta_pow(zp(rng)), n}, order);
    }
    return f;
}

QSeries random_unit(std::mt19937& rng, long order) {
    QSeries f = random_series(rng, order);
    while (f.is_zero()) f = random_series(rng, order);
    return f;
}

}  // namespace

TEST_CASE("construction and coefficient access") {
    const QSeries z = QSeries::zero(5);
    CHECK(z.is_zero());
    CHECK(z.order() == 5);
    CHECK(z.valuation() == 6);
    CHECK(z.coeff(3) == Cyc(0));
    CHECK_THROWS_AS(z.coeff(6), Error);

    const QSeries m = QSeries::monomial({kI, -2}, 4);
    CHECK(m.valuation() == -2);
    CHECK(m.order() == 4);
    CHECK(m.coeff(-2) == kI);
    CHECK(m.coeff(0) == Cyc(0));
    CHECK(m.coeff(-5) == Cyc(0));

    // monomial beyond the guaranteed order degenerates to the zero series
    CHECK(QSeries::monomial({Cyc(1), 9}, 4).is_zero());
}

TEST_CASE("add and mul track guaranteed orders") {
    const QSeries f = QSeries::one(5) + QSeries::q_power(1, 5);  // 1 + q, order 5
    const QSeries g = QSeries::q_power(2, 9);                    // q^2, order 9
    CHECK((f + g).order() == 5);
    const QSeries p = f * g;
    CHECK(p.order() == 7);  // min(5 + 2, 9 + 0)
    CHECK(p.valuation() == 2);
    CHECK(p.coeff(2) == Cyc(1));
    CHECK(p.coeff(3) == Cyc(1));
    CHECK(p.coeff(4) == Cyc(0));

    // scaling keeps the order, scaling by zero keeps the zero series order
    CHECK((Cyc(0) * f).is_zero());
    CHECK((Cyc(0) * f).order() == 5);
    CHECK((Cyc(Rational(3, 2)) * f).coeff(1) == Cyc(Rational(3, 2)));
}

TEST_CASE("invert: frozen examples") {
    const QSeries f = QSeries::one(6) - QSeries::q_power(1, 6);  // 1 - q
    const QSeries fi = f.invert();
    CHECK(fi.order() == 6);
    for (long n = 0; n <= 6; ++n) CHECK(fi.coeff(n) == Cyc(1));

    // q^2 (1 - q) carries order 6 + 2 = 8; the inverse drops to 8 - 2*2 = 4
    const QSeries g = f.mul_monomial({Cyc(1), 2});
    CHECK(g.order() == 8);
    const QSeries gi = g.invert();
    CHECK(gi.valuation() == -2);
    CHECK(gi.order() == 4);
    for (long n = -2; n <= 4; ++n) CHECK(gi.coeff(n) == Cyc(1));

    CHECK_THROWS_AS(QSeries::zero(4).invert(), Error);
    try {
        QSeries::zero(4).invert();
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonInvertible);
        CHECK(e.genericity_violation());
    }
}

TEST_CASE("invert round trip on random series") {
    std::mt19937 rng(20240812);
    for (int it = 0; it < 50; ++it) {
        const QSeries f = random_unit(rng, 12);
        const QSeries prod = f * f.invert();
        CHECK(agree(prod, QSeries::one(prod.order())));
    }
}

TEST_CASE("geometric factor inverses") {
    const QSeries a = geom_factor_inverse({Cyc(1), 1}, 8);
    for (long n = 0; n <= 8; ++n) CHECK(a.coeff(n) == Cyc(1));

    const QSeries b = geom_factor_inverse({kI, 2}, 7);
    CHECK(b.coeff(0) == Cyc(1));
    CHECK(b.coeff(2) == kI);
    CHECK(b.coeff(4) == Cyc(-1));
    CHECK(b.coeff(6) == -kI);
    CHECK(b.coeff(3) == Cyc(0));

    // constant factor
    const QSeries c = geom_factor_inverse({kI, 0}, 3);
    CHECK(c.coeff(0) == (Cyc(1) - kI).inv());

    // negative exponent: (1 - i q^-2)^-1 = i q^2 + q^4 - i q^6 + ...
    const QSeries d = geom_factor_inverse({kI, -2}, 7);
    CHECK(d.valuation() == 2);
    CHECK(d.coeff(2) == kI);
    CHECK(d.coeff(4) == Cyc(1));
    CHECK(d.coeff(6) == -kI);
    const QSeries factor = QSeries::one(9) - QSeries::monomial({kI, -2}, 9);
    CHECK(agree(factor * d, QSeries::one(0)));

    CHECK_THROWS_AS(geom_factor_inverse({Cyc(1), 0}, 5), Error);
    try {
        geom_factor_inverse({Cyc(1), 0}, 5);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PoleAtFactor);
        CHECK(e.genericity_violation());
    }
}

TEST_CASE("pochhammer product matches an independent integer expansion") {
    // naive truncated product of (1 - q^k), k = 1..12, over int64 polynomials
    std::vector<long long> poly{1};
    poly.resize(13, 0);
    for (int k = 1; k <= 12; ++k) {
        std::vector<long long> next(13, 0);
        for (int n = 0; n <= 12; ++n) {
            if (poly[static_cast<size_t>(n)] == 0) continue;
            next[static_cast<size_t>(n)] += poly[static_cast<size_t>(n)];
            if (n + k <= 12) next[static_cast<size_t>(n + k)] -= poly[static_cast<size_t>(n)];
        }
        poly = std::move(next);
    }
    const std::vector<long long> euler{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
    CHECK(poly == euler);

    const QSeries jp = pochhammer_inf({Cyc(1), 1}, 1, 12);
    for (long n = 0; n <= 12; ++n) CHECK(jp.coeff(n) == Cyc(euler[static_cast<size_t>(n)]));

    // vanishing factor flags the zero series
    CHECK(pochhammer_inf({Cyc(1), 0}, 1, 8).is_zero());

    CHECK_THROWS_AS(pochhammer_inf({Cyc(1), -1}, 1, 8), Error);
    try {
        pochhammer_inf({Cyc(1), -1}, 1, 8);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeExponent);
    }
    CHECK_THROWS_AS(pochhammer_inf({Cyc(1), 1}, 0, 8), Error);
}

TEST_CASE("trinomial product") {
    // prod (1 + a q^n + q^2n) with a = -1: factors (1 - q^n + q^2n)
    const QSeries t = trinomial_product(Cyc(-1), 6);
    CHECK(t.coeff(0) == Cyc(1));
    CHECK(t.coeff(1) == Cyc(-1));
    CHECK(t.coeff(2) == Cyc(0));   // q^2 - q^2 from (1 - q + q^2)(1 - q^2 + q^4)
    const QSeries prod = t * trinomial_product_inverse(Cyc(-1), 6);
    CHECK(agree(prod, QSeries::one(6)));
}

TEST_CASE("subst_q_power") {
    const QSeries f = QSeries::one(3) + QSeries::q_power(1, 3);
    const QSeries f2 = f.subst_q_power(2);
    CHECK(f2.order() == 7);
    CHECK(f2.coeff(0) == Cyc(1));
    CHECK(f2.coeff(2) == Cyc(1));
    CHECK(f2.coeff(1) == Cyc(0));
    CHECK(agree(f.subst_q_power(1), f));
    CHECK_THROWS_AS(f.subst_q_power(0), Error);

    const QSeries lau = QSeries::monomial({kI, -1}, 2);
    const QSeries lau3 = lau.subst_q_power(3);
    CHECK(lau3.valuation() == -3);
    CHECK(lau3.order() == 8);
    CHECK(lau3.coeff(-3) == kI);
}

TEST_CASE("twist") {
    QSeries f = QSeries::zero(6);
    for (long n = 0; n <= 6; ++n) f = f + QSeries::q_power(n, 6);
    const QSeries ft = f.twist(kI);
    for (long n = 0; n <= 6; ++n) CHECK(ft.coeff(n) == kI.pow(n));
    CHECK(ft.order() == 6);

    QSeries g = QSeries::monomial({Cyc(1), -2}, 4) + QSeries::q_power(1, 4);
    const QSeries gt = g.twist(kI);
    CHECK(gt.coeff(-2) == Cyc(-1));
    CHECK(gt.coeff(1) == kI);

    QSeries cycled = f;
    for (int k = 0; k < 24; ++k) cycled = cycled.twist(Cyc::zeta_pow(1));
    CHECK(agree(cycled, f));
}

TEST_CASE("truncation commutes with arithmetic") {
    std::mt19937 rng(5150);
    for (int it = 0; it < 30; ++it) {
        const QSeries f = random_unit(rng, 14), g = random_unit(rng, 14);
        const QSeries sum = (f.truncate(10) + g.truncate(10));
        CHECK(agree(sum, f + g));
        const QSeries prod = f.truncate(10) * g.truncate(10);
        CHECK(agree(prod, f * g));
        CHECK(prod.order() == 10 + std::min(f.valuation(), g.valuation()));
        const QSeries inv = f.truncate(10).invert();
        CHECK(inv.order() == 10 - 2 * f.valuation());
        CHECK(agree(inv, f.invert()));
    }
    CHECK_THROWS_AS(QSeries::one(4).truncate(5), Error);
}

TEST_CASE("series text form") {
    CHECK(QSeries::zero(3).str() == "0 + O(q^4)");
    CHECK(QSeries::one(3).str() == "1 + O(q^4)");
    CHECK(QSeries::monomial({Cyc(-1), 2}, 5).str() == "-q^2 + O(q^6)");
    const QSeries f = QSeries::one(2) - QSeries::q_power(1, 2);
    CHECK(f.str() == "1 - q + O(q^3)");
    CHECK(QSeries::monomial({kI, 2}, 3).str() == "i*q^2 + O(q^4)");
    CHECK(QSeries::monomial({Cyc(Rational(3, 2)), 1}, 2).str() == "3/2*q + O(q^3)");
    CHECK(QSeries::monomial({Cyc(1) + kI, 0}, 2).str() == "(1 + z^6) + O(q^3)");
}

TEST_CASE("series json form") {
    const QSeries f = QSeries::monomial({kI, -1}, 1) + QSeries::one(1);
    const auto j = nlohmann::json::parse(f.json_str());
    CHECK(j["valuation"] == -1);
    CHECK(j["order"] == 1);
    REQUIRE(j["coeffs"].size() == 3);
    CHECK(j["coeffs"][0][6] == "1/1");
    CHECK(j["coeffs"][1][0] == "1/1");
    CHECK(j["coeffs"][2][0] == "0/1");

    const auto z = nlohmann::json::parse(QSeries::zero(2).json_str());
    CHECK(z["valuation"] == 3);
    CHECK(z["coeffs"].empty());
}

TEST_CASE("monomial helpers") {
    const Monomial m{kI, 3};
    const Monomial mi = m.inverse();
    CHECK(mi.e == -3);
    CHECK(mi.c == -kI);
    const Monomial sq = m.pow(2);
    CHECK(sq.e == 6);
    CHECK(sq.c == Cyc(-1));
    const Monomial tw = m.twisted(kI);  // i * (iq)^3 = i * -i q^3... coefficient i*i^3 = 1
    CHECK(tw.c == Cyc(1));
    CHECK(tw.e == 3);
    CHECK(m.str() == "i*q^3");
    CHECK(Monomial{Cyc(1), 0}.str() == "1");
    CHECK(Monomial{Cyc(-1), 1}.str() == "-q");
    CHECK(Monomial{Cyc::zeta_pow(5), -2}.str() == "z^5*q^-2");
}
