#include "qtheta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <utility>

#include "json.hpp"
#include "qtheta/mock.hpp"
#include "qtheta/partitions.hpp"
#include "qtheta/thetas.hpp"

namespace qtheta {

namespace {

using Builder = std::function<QSeries(long)>;

Cyc ci() { return Cyc::embed("i"); }
Cyc comega() { return Cyc::embed("omega"); }
Cyc calpha() { return Cyc::embed("alpha"); }
Cyc csqrt2() { return Cyc::embed("sqrt2"); }
Cyc csqrt3() { return Cyc::embed("sqrt3"); }
Cyc zeta(int k) { return Cyc::zeta_pow(k); }
Cyc frac(long num, long den) { return Cyc(Rational(num, den)); }

QSeries theta(const Cyc& c, long e, long m, long N) { return theta_j({Monomial{c, e}, m}, N); }
QSeries theta_tw(const Cyc& c, long e, const Cyc& u, long m, long N) {
    return theta_j_twisted({c, e}, u, m, N);
}
QSeries J24(long N) { return theta(Cyc(1), 2, 4, N); }  // j(q^2; q^4)
QSeries one_plus(const Monomial& x, long N) { return QSeries::one(N) + QSeries::monomial(x, N); }
QSeries one_minus(const Monomial& x, long N) { return QSeries::one(N) - QSeries::monomial(x, N); }
QSeries poch(const Cyc& c, long e, long step, long N) {
    return pochhammer_inf({c, e}, step, N);
}
// prod 1/(1 + c q^{kn} + q^{2kn}) with enough headroom before substitution
QSeries trin_inv_subst(const Cyc& c, long k, long N) {
    return trinomial_product_inverse(c, N / k + 2).subst_q_power(k);
}
QSeries trin_subst(const Cyc& c, long k, long N) {
    return trinomial_product(c, N / k + 2).subst_q_power(k);
}

void add(std::vector<IdentityCheck>& out, std::string id, long order, Builder lhs, Builder rhs) {
    out.push_back({std::move(id), order, std::move(lhs), std::move(rhs)});
}

// ---------- preliminary theta toolbox ----------

void append_prelim(std::vector<IdentityCheck>& out) {
    add(out, "eq2.1a", 60, [](long N) { return Jbar(1, 2, N); },
        [](long N) { return Jm(2, N).pow(5) / (Jm(1, N).pow(2) * Jm(4, N).pow(2)); });
    add(out, "eq2.1b", 60, [](long N) { return J(1, 2, N); },
        [](long N) { return Jm(1, N).pow(2) / Jm(2, N); });
    add(out, "eq2.1c", 60, [](long N) { return J(1, 4, N); },
        [](long N) { return Jm(1, N) * Jm(4, N) / Jm(2, N); });

    // j(qx; q) = -x^{-1} j(x; q)
    for (Monomial x : {Monomial{Cyc(1), 0}, Monomial{zeta(1), 0}, Monomial{zeta(3), 1}}) {
        add(out, "eq2.2[x=" + x.str() + "]", 60,
            [x](long N) { return theta(x.c, x.e + 1, 1, N); },
            [x](long N) {
                QSeries base = theta(x.c, x.e, 1, N);
                return base.is_zero() ? base : base.mul_monomial(-x.inverse());
            });
    }
    // j(x; q) = j(q x^{-1}; q)
    for (Monomial x : {Monomial{zeta(1), 0}, Monomial{ci(), 1}}) {
        add(out, "eq2.3[x=" + x.str() + "]", 60,
            [x](long N) { return theta(x.c, x.e, 1, N); },
            [x](long N) { return theta(x.c.inv(), 1 - x.e, 1, N); });
    }
    // j(x; q) j(-x; q) = j(x^2; q^2) J_{1,2}
    for (Monomial x : {Monomial{zeta(1), 1}, Monomial{zeta(5), 0}, Monomial{calpha(), 0}}) {
        add(out, "eq2.4[x=" + x.str() + "]", 60,
            [x](long N) { return theta(x.c, x.e, 1, N) * theta(-x.c, x.e, 1, N); },
            [x](long N) { return theta(x.c.pow(2), 2 * x.e, 2, N) * J(1, 2, N); });
    }
    // j(x; q) J_2^2 = J_1 j(x; q^2) j(qx; q^2)
    for (Monomial x : {Monomial{zeta(1), 1}, Monomial{comega(), 0}}) {
        add(out, "eq2.5[x=" + x.str() + "]", 60,
            [x](long N) { return theta(x.c, x.e, 1, N) * Jm(2, N).pow(2); },
            [x](long N) {
                return Jm(1, N) * theta(x.c, x.e, 2, N) * theta(x.c, x.e + 1, 2, N);
            });
    }
    // the p-part residue split reassembles the theta
    struct Diss { Monomial x; long m; long p; };
    for (const Diss& d : {Diss{{zeta(1), 1}, 1, 2}, Diss{{zeta(1), 1}, 1, 3},
                          Diss{{ci(), 2}, 3, 5}, Diss{{zeta(3), -1}, 2, 2}}) {
        std::string id = "eq2.6[x=" + d.x.str() + ",m=" + std::to_string(d.m) +
                         ",p=" + std::to_string(d.p) + "]";
        add(out, id, 60, [d](long N) { return theta_j({d.x, d.m}, N); },
            [d](long N) { return theta_j_dissected({d.x, d.m}, d.p, N); });
    }
    // j(x; q) = j(-q x^2; q^4) - x j(-q^3 x^2; q^4)
    for (Monomial x : {Monomial{zeta(1), 0}, Monomial{calpha(), 0}, Monomial{zeta(1), 1}}) {
        add(out, "eq2.7[x=" + x.str() + "]", 60,
            [x](long N) { return theta(x.c, x.e, 1, N); },
            [x](long N) {
                Cyc c2 = x.c.pow(2);
                return theta(-c2, 1 + 2 * x.e, 4, N) -
                       theta(-c2, 3 + 2 * x.e, 4, N).mul_monomial(x);
            });
    }
}

// ---------- g-function transformations and Appell-Lerch reductions ----------

void append_prop22(std::vector<IdentityCheck>& out, const Monomial& x, long order) {
    add(out, "prop2.2[x=" + x.str() + "]", order,
        [x](long N) { return g_mock(x, N); },
        [x](long N) {
            Cyc c = x.c;
            long e = x.e;
            QSeries tail = Jm(2, N) * J24(N).pow(2) /
                           (QSeries::monomial(x, N) * theta(c, e, 1, N) *
                            theta(-c.pow(2), 1 + 2 * e, 2, N));
            return -QSeries::monomial(x.inverse(), N) +
                   g_mock({-c.pow(-2), 1 - 2 * e}, N, 4).mul_monomial({c.pow(-3), 1 - 3 * e}) -
                   g_mock({-c.pow(2), 1 + 2 * e}, N, 4).mul_monomial({Cyc(1), 1}) + tail;
        });
}

void append_prop23(std::vector<IdentityCheck>& out, const Monomial& x, const Monomial& z,
                   long order) {
    add(out, "prop2.3[x=" + x.str() + ",z=" + z.str() + "]", order,
        [x](long N) { return g_mock(x, N); },
        [x, z](long N) {
            Cyc cx = x.c, cz = z.c;
            long ex = x.e, ez = z.e;
            Monomial x3z{cx.pow(3) * cz, 3 * ex + ez};
            QSeries m1 = appell_m({{cx.pow(-3), 1 - 3 * ex}, x3z, 3}, N);
            QSeries m2 = appell_m({{cx.pow(-3), 2 - 3 * ex}, x3z, 3}, N);
            QSeries thetas = Jm(1, N).pow(2) * theta(cx * cz, ex + ez, 1, N) *
                             theta(cz, ez, 3, N) /
                             (theta(cx, ex, 1, N) * theta(cz, ez, 1, N) *
                              theta(x3z.c, x3z.e, 3, N));
            return -m1.mul_monomial({cx.pow(-2), -2 * ex}) -
                   m2.mul_monomial({cx.pow(-1), -ex}) + thetas;
        });
}

void append_eq210(std::vector<IdentityCheck>& out, const Monomial& x, long order) {
    add(out, "eq2.10[x=" + x.str() + "]", order,
        [x](long N) { return g_mock(x, N); },
        [x](long N) {
            Cyc cx = x.c;
            long ex = x.e;
            Monomial x3{cx.pow(3), 3 * ex};
            QSeries m1 = appell_m({{cx.pow(-3), 1 - 3 * ex}, x3, 3}, N);
            QSeries m2 = appell_m({{cx.pow(-3), 2 - 3 * ex}, x3, 3}, N);
            QSeries thetas = Jm(3, N).pow(3) / (Jm(1, N) * theta(x3.c, x3.e, 3, N));
            return -m1.mul_monomial({cx.pow(-2), -2 * ex}) -
                   m2.mul_monomial({cx.pow(-1), -ex}) + thetas;
        });
}

void append_prop24(std::vector<IdentityCheck>& out, const Monomial& x, long order) {
    add(out, "prop2.4[x=" + x.str() + "]", order,
        [x](long N) {
            Cyc c = x.c;
            long e = x.e;
            QSeries a = theta(c, 2 + e, 4, N) * theta(c, 5 + e, 8, N);
            QSeries b = (theta(c, e, 4, N) * theta(c, 1 + e, 8, N))
                            .mul_monomial({c.inv(), 1 - e});
            QSeries d = Jm(1, N) / Jm(4, N) * theta(-c, 3 + e, 4, N) * theta(c, 3 + e, 8, N);
            return a + b - d;
        },
        [](long N) { return QSeries::zero(N); });
}

void append_prop25(std::vector<IdentityCheck>& out, const Monomial& x, long order) {
    add(out, "prop2.5[x=" + x.str() + "]", order,
        [x](long N) {
            Cyc c = x.c;
            long e = x.e;
            QSeries a = theta(-c, e, 4, N) * theta(-c, 5 + e, 8, N);
            QSeries b = theta(-c, 2 + e, 4, N) * theta(-c, 1 + e, 8, N);
            QSeries d = (Jm(1, N) / Jm(4, N) * theta(c, 3 + e, 4, N) *
                         theta(-c, 7 + e, 8, N))
                            .mul_monomial(x);
            return a - b - d;
        },
        [](long N) { return QSeries::zero(N); });
}

void append_props(std::vector<IdentityCheck>& out) {
    for (Cyc c : {calpha(), ci(), zeta(1), zeta(2)}) append_prop22(out, {c, 0}, 30);
    append_prop22(out, {zeta(1), 1}, 30);

    append_prop23(out, {zeta(2), 0}, {zeta(1), 0}, 30);
    append_prop23(out, {calpha(), 0}, {Cyc(-1), 0}, 30);
    append_prop23(out, {calpha(), 0}, {zeta(1), 0}, 30);
    append_prop23(out, {zeta(2), 0}, {-zeta(1), 0}, 30);

    for (Cyc c : {zeta(2), calpha(), zeta(5), -zeta(1)}) append_eq210(out, {c, 0}, 30);

    append_prop24(out, {Cyc(-1), 0}, 60);
    append_prop24(out, {zeta(1), 1}, 60);
    append_prop24(out, {zeta(5), 0}, 60);
    append_prop24(out, {ci(), 2}, 60);

    append_prop25(out, {Cyc(1), 4}, 60);
    append_prop25(out, {zeta(1), 1}, 60);
    append_prop25(out, {zeta(5), 0}, 60);
    append_prop25(out, {ci(), 2}, 60);

    // G(x, q) = (1 - x)(x g(x; q) + 1)
    for (Monomial x : {Monomial{ci(), 0}, Monomial{calpha(), 0}, Monomial{-calpha(), 0},
                       Monomial{zeta(1), 0}, Monomial{zeta(2), 0}, Monomial{-zeta(2), 0}}) {
        add(out, "eq2.11[x=" + x.str() + "]", 50,
            [x](long N) { return G_rank(x, N); },
            [x](long N) {
                return one_minus(x, N) *
                       (QSeries::monomial(x, N) * g_mock(x, N) + QSeries::one(N));
            });
    }
}

// ---------- f_a <-> G correspondences ----------

void append_relations(std::vector<IdentityCheck>& out) {
    struct Rel { const char* id; Cyc a; Cyc c; };
    std::vector<Rel> rels = {{"rel.f0", Cyc(0), ci()},
                             {"rel.fsqrt2", csqrt2(), -calpha()},
                             {"rel.fsqrt3", csqrt3(), -zeta(2)},
                             {"rel.f1", Cyc(1), comega()},
                             {"rel.fm1", Cyc(-1), -comega()}};
    for (const Rel& r : rels) {
        add(out, r.id, 50, [a = r.a](long N) { return f_a(a, N); },
            [c = r.c](long N) { return G_rank({c, 0}, N); });
    }
}

// ---------- first entry ----------

Builder entry1_lhs(const Monomial& t) {
    return [t](long N) {
        Cyc i = ci();
        Monomial it{i * t.c, t.e};
        QSeries a = one_plus(t, N).invert() * G_rank_twisted({-t.c, t.e}, Cyc(-1), N);
        QSeries b = one_minus(t, N).invert() * G_rank_twisted(t, Cyc(-1), N);
        QSeries c = one_minus(it, N).invert() * G_rank(it, N);
        return a - i * b + (i - Cyc(1)) * c;
    };
}

void append_entry1(std::vector<IdentityCheck>& out, const Monomial& t) {
    const std::string tag = "[t=" + t.str() + "]";
    const Cyc i = ci();

    add(out, "entry1.reduced" + tag, 40, entry1_lhs(t), [t, i](long N) {
        Cyc c = t.c;
        long e = t.e;
        QSeries num = Jm(4, N).pow(3) * theta(-i * c, e, 1, N);
        QSeries den = Jm(2, N).pow(2) * theta(c.pow(4), 4 * e, 4, N);
        return (num / den).mul_monomial({Cyc(-2) * (Cyc(1) + i) * c, e});
    });

    // the a,b form needs scalar t
    if (t.e == 0) {
        Cyc c = t.c;
        Cyc a = c + c.inv();
        Cyc b = -i * (c - c.inv());
        add(out, "entry1.original" + tag, 40,
            [a, b](long N) {
                QSeries fa = f_a(a, N).twist(Cyc(-1));
                QSeries fma = f_a(-a, N).twist(Cyc(-1));
                QSeries fb = f_a(b, N);
                return frac(1, 4) * (b - a + Cyc(2)) * fa +
                       frac(1, 4) * (b + a + Cyc(2)) * fma - frac(1, 2) * b * fb;
            },
            [a, b](long N) {
                Cyc c4 = a * a * b * b - Cyc(2);
                return Jm(4, N) / poch(Cyc(-1), 1, 2, N) * trinomial_product(-b, N) *
                       trin_inv_subst(c4, 4, N);
            });
    }

    add(out, "eq3.1" + tag, 40,
        [t, i](long N) {
            Cyc c = t.c;
            Monomial it{i * c, t.e};
            Monomial t2 = t.pow(2);
            QSeries ca = frac(1, 4) * (i - Cyc(1)) *
                         (one_minus(it, N) * one_minus(t, N)).mul_monomial(t.inverse());
            QSeries cb = frac(1, 4) * (i + Cyc(1)) *
                         (one_minus(it, N) * one_plus(t, N)).mul_monomial(t.inverse());
            QSeries cc = frac(1, 2) * i * one_minus(t2, N).mul_monomial(t.inverse());
            return ca * G_rank_twisted({-c, t.e}, Cyc(-1), N) +
                   cb * G_rank_twisted(t, Cyc(-1), N) - cc * G_rank({i * c, t.e}, N);
        },
        [t, i](long N) {
            Cyc c = t.c;
            long e = t.e;
            QSeries num = Jm(4, N) * poch(-i * c, 1 + e, 1, N) * poch(i * c.inv(), 1 - e, 1, N);
            QSeries den = poch(Cyc(-1), 1, 2, N) * poch(c.pow(4), 4 + 4 * e, 4, N) *
                          poch(c.pow(-4), 4 - 4 * e, 4, N);
            return num / den;
        });

    add(out, "eq3.3" + tag, 40, entry1_lhs(t), [t, i](long N) {
        Cyc c = t.c;
        long e = t.e;
        QSeries bracket = theta_tw(-c, e, Cyc(-1), 1, N).invert() -
                          i * theta_tw(c, e, Cyc(-1), 1, N).invert() -
                          (Cyc(1) - i) * theta(i * c, e, 1, N).invert();
        return Jm(2, N) * J24(N).pow(2) / theta(c.pow(2), 1 + 2 * e, 2, N) * bracket;
    });

    add(out, "eq3.4" + tag, 40,
        [t, i](long N) {
            Cyc c = t.c;
            long e = t.e;
            QSeries tm = theta_tw(c, e, Cyc(-1), 1, N);   // j(t; -q)
            QSeries ti = theta(i * c, e, 1, N);           // j(it; q)
            QSeries tp = theta_tw(-c, e, Cyc(-1), 1, N);  // j(-t; -q)
            return tm * ti - i * tp * ti - (Cyc(1) - i) * tp * tm;
        },
        [t, i](long N) {
            Cyc c = t.c;
            long e = t.e;
            QSeries prod = theta(c.pow(2), 1 + 2 * e, 4, N) * theta(c.pow(2), 3 + 2 * e, 4, N);
            return prod.mul_monomial({Cyc(-2) * (Cyc(1) + i) * c, e});
        });
}

// ---------- second entry ----------

Builder entry2_lhs(const Monomial& t) {
    return [t](long N) {
        QSeries acc = QSeries::zero(N);
        for (int k = 0; k < 3; ++k) {
            Monomial wt{comega().pow(k) * t.c, t.e};
            acc = acc + (one_minus(wt, N).mul_monomial(wt)).invert() * G_rank(wt, N);
        }
        return acc;
    };
}

void append_entry2(std::vector<IdentityCheck>& out, const Monomial& t) {
    const std::string tag = "[t=" + t.str() + "]";

    add(out, "entry2.reduced" + tag, 40, entry2_lhs(t), [t](long N) {
        return Cyc(3) * Jm(3, N).pow(3) /
               (Jm(1, N) * theta(t.c.pow(3), 3 * t.e, 3, N));
    });

    if (t.e == 0) {
        Cyc c = t.c;
        Cyc w = comega();
        Cyc a = w * c + (w * c).inv();
        Cyc b = c + c.inv();
        Cyc abab = a * b * (a + b);
        add(out, "entry2.original" + tag, 40,
            [a, b](long N) {
                return (a + Cyc(1)) * f_a(-a, N) + (b + Cyc(1)) * f_a(-b, N) -
                       (a + b - Cyc(1)) * f_a(a + b, N);
            },
            [abab](long N) {
                return Cyc(3) * Jm(3, N).pow(2) / Jm(1, N) * trin_inv_subst(abab, 3, N);
            });
        add(out, "entry2.rhs" + tag, 40,
            [abab](long N) {
                return Cyc(3) * Jm(3, N).pow(2) / Jm(1, N) * trin_inv_subst(abab, 3, N);
            },
            [c](long N) {
                return Cyc(3) * (Cyc(1) - c.pow(3)) * Jm(3, N).pow(3) /
                       (Jm(1, N) * theta(c.pow(3), 0, 3, N));
            });
        add(out, "eq3.5" + tag, 40,
            [c, w](long N) {
                QSeries acc = QSeries::zero(N);
                Cyc c3 = Cyc(1) - c.pow(3);
                for (int k = 0; k < 3; ++k) {
                    Cyc wc = w.pow(k) * c;
                    acc = acc + c3 * (wc * (Cyc(1) - wc)).inv() * G_rank({wc, 0}, N);
                }
                return acc;
            },
            [c](long N) {
                Cyc abab = -(c.pow(3) + c.pow(-3));
                return Cyc(3) * Jm(3, N).pow(2) / Jm(1, N) * trin_inv_subst(abab, 3, N);
            });
    }

    add(out, "eq3.6" + tag, 40, entry2_lhs(t), [t](long N) {
        QSeries acc = QSeries::zero(N);
        for (int k = 0; k < 3; ++k)
            acc = acc + g_mock({comega().pow(k) * t.c, t.e}, N);
        return acc;
    });
}

// ---------- third entry ----------

Builder entry3_lhs() {
    return [](long N) {
        Cyc s3 = csqrt3();
        QSeries f1 = f_a(Cyc(1), N).twist(Cyc(-1));
        QSeries fm1 = f_a(Cyc(-1), N).twist(Cyc(-1));
        QSeries fs3 = f_a(s3, N);
        return frac(1, 6) * (Cyc(3) + s3) * f1 + frac(1, 2) * (Cyc(1) + s3) * fm1 - fs3;
    };
}

void append_entry3(std::vector<IdentityCheck>& out) {
    Cyc s3 = csqrt3();
    add(out, "entry3.reduced", 40, entry3_lhs(), [s3](long N) {
        return Cyc(2) * s3.inv() * Jm(1, N) * Jm(4, N).pow(2) / Jm(2, N).pow(2) *
               trinomial_product(-s3, N) * trin_inv_subst(Cyc(1), 4, N);
    });
    add(out, "entry3.original", 40, entry3_lhs(), [s3](long N) {
        return Cyc(2) * s3.inv() * psi(N).twist(Cyc(-1)) * Jm(4, N) / Jm(6, N) *
               trinomial_product_inverse(s3, N);
    });
    add(out, "entry3.chain", 40,
        [](long N) { return trin_subst(Cyc(-1), 2, N) * trin_inv_subst(Cyc(1), 4, N); },
        [](long N) { return Jm(2, N) / Jm(6, N); });
}

// ---------- fourth entry ----------

Builder entry4_core_lhs() {
    return [](long N) {
        Cyc i = ci(), al = calpha();
        QSeries a = theta(Cyc(1), 1, 4, N) * theta(Cyc(1), 1, 2, N);
        QSeries b = theta(Cyc(-1), 1, 4, N) * theta(Cyc(-1), 1, 2, N);
        return (Cyc(1) - i) * (a + al.inv() * b) -
               Cyc(2) * phi(N).twist(i) * theta_tw(al, 0, i, 1, N);
    };
}

QSeries entry4_x_part(long N) {  // j(-q^4;q^8) j(-q^6;q^16) - q^2 j(-q^8;q^8) j(-q^14;q^16)
    return theta(Cyc(-1), 4, 8, N) * theta(Cyc(-1), 6, 16, N) -
           (theta(Cyc(-1), 8, 8, N) * theta(Cyc(-1), 14, 16, N)).mul_monomial({Cyc(1), 2});
}

QSeries entry4_y_part(long N) {  // j(-q^4;q^8) j(-q^14;q^16) - j(-q^8;q^8) j(-q^6;q^16)
    return theta(Cyc(-1), 4, 8, N) * theta(Cyc(-1), 14, 16, N) -
           theta(Cyc(-1), 8, 8, N) * theta(Cyc(-1), 6, 16, N);
}

void append_entry4(std::vector<IdentityCheck>& out) {
    Cyc i = ci(), al = calpha(), s2 = csqrt2();

    add(out, "entry4.original", 40,
        [i, al, s2](long N) {
            QSeries f0 = f_a(Cyc(0), N);
            return frac(1, 2) * (Cyc(1) + al) * f0.twist(i) +
                   frac(1, 2) * (Cyc(1) + al.inv()) * f0.twist(-i) - f_a(s2, N);
        },
        [s2](long N) {
            return s2.inv() * psi(N).twist(Cyc(-1)) * poch(Cyc(-1), 2, 4, N) *
                   trinomial_product_inverse(s2, N);
        });

    add(out, "entry4.bridge", 40,
        [i, al](long N) {
            return frac(1, 2) * (Cyc(1) + al) * G_rank_twisted({i, 0}, i, N) +
                   frac(1, 2) * (Cyc(1) + al.inv()) * G_rank_twisted({i, 0}, -i, N) -
                   G_rank({-al, 0}, N);
        },
        [al, s2](long N) {
            return s2.inv() * psi(N).twist(Cyc(-1)) * poch(Cyc(-1), 2, 4, N) /
                   (poch(-al, 1, 1, N) * poch(-al.inv(), 1, 1, N));
        });

    add(out, "entry4.reduced", 40,
        [i, al](long N) {
            return G_rank_twisted({i, 0}, i, N) + al.inv() * G_rank_twisted({i, 0}, -i, N) -
                   Cyc(2) * (Cyc(1) + al).inv() * G_rank({-al, 0}, N);
        },
        [al, s2](long N) {
            return s2 * psi(N).twist(Cyc(-1)) * poch(Cyc(-1), 2, 4, N) * Jm(1, N) /
                   theta(-al, 0, 1, N);
        });

    add(out, "entry4.rotated", 40,
        [i, al](long N) {
            return G_rank_twisted({i, 0}, Cyc(-1), N) + al.inv() * G_rank({i, 0}, N) -
                   Cyc(2) * (Cyc(1) + al).inv() * G_rank_twisted({-al, 0}, i, N);
        },
        [i, al, s2](long N) {
            return s2 * psi(N).twist(-i) * poch(Cyc(1), 2, 4, N) * Jm(1, N).twist(i) /
                   theta_tw(-al, 0, i, 1, N);
        });

    add(out, "entry4.core", 60, entry4_core_lhs(), [al, s2](long N) {
        return s2 * J24(N) * theta_tw(al, 0, ci(), 1, N);
    });

    add(out, "eq3.14a", 60, [i](long N) { return G_rank({i, 0}, N); },
        [i](long N) {
            return g_mock({Cyc(1), 1}, N, 4).mul_monomial({Cyc(-2), 1}) +
                   (Cyc(1) - i) * Jm(2, N) * J24(N).pow(2) /
                       (theta(i, 0, 1, N) * theta(Cyc(1), 1, 2, N));
        });

    add(out, "eq3.14b", 60,
        [i](long N) { return G_rank_twisted({i, 0}, Cyc(-1), N); },
        [i](long N) {
            return g_mock({Cyc(-1), 1}, N, 4).mul_monomial({Cyc(2), 1}) +
                   (Cyc(1) - i) * Jm(2, N) * J24(N).pow(2) /
                       (theta_tw(i, 0, Cyc(-1), 1, N) * theta(Cyc(-1), 1, 2, N));
        });

    add(out, "eq3.14c", 60,
        [al](long N) {
            return Cyc(-2) * (Cyc(1) + al).inv() * G_rank({-al, 0}, N);
        },
        [i, al](long N) {
            return g_mock({i, 1}, N, 4).mul_monomial({Cyc(2) * i, 1}) +
                   g_mock({-i, 1}, N, 4).mul_monomial({Cyc(-2) * al, 1}) -
                   Cyc(2) * Jm(2, N) * J24(N).pow(2) /
                       (theta(-al, 0, 1, N) * theta(-i, 1, 2, N));
        });

    add(out, "eq3.14d", 60,
        [i, al](long N) {
            return Cyc(-2) * (Cyc(1) + al).inv() * G_rank_twisted({-al, 0}, i, N);
        },
        [i, al](long N) {
            return g_mock({Cyc(-1), 1}, N, 4).mul_monomial({Cyc(-2), 1}) +
                   g_mock({Cyc(1), 1}, N, 4).mul_monomial({Cyc(2) * al.inv(), 1}) -
                   Cyc(2) * (Cyc(1) - i).inv() * phi(N).twist(i) *
                       theta_tw(al, 0, i, 1, N) / Jm(4, N);
        });

    add(out, "eq3.ja", 60,
        [al](long N) { return theta(al, 0, 1, N) * theta(-al, 0, 1, N); },
        [i](long N) {
            return (Cyc(1) - i) * Jm(1, N).pow(2) * Jm(8, N) / Jm(4, N);
        });

    add(out, "eq3.ji", 60, [i](long N) { return theta(-i, 1, 2, N); },
        [](long N) { return Jm(4, N).pow(2) / Jm(8, N); });

    add(out, "eq3.16", 60, [i](long N) { return theta(i, 0, 1, N); },
        [i](long N) { return (Cyc(1) - i) * theta(Cyc(1), 1, 4, N); });

    add(out, "eq3.17", 60, [](long N) { return theta(Cyc(1), 1, 4, N); },
        [](long N) {
            return theta(Cyc(-1), 6, 16, N) -
                   theta(Cyc(-1), 14, 16, N).mul_monomial({Cyc(1), 1});
        });

    add(out, "eq3.18", 60, [](long N) { return theta(Cyc(1), 1, 2, N); },
        [](long N) {
            return theta(Cyc(-1), 4, 8, N) -
                   theta(Cyc(-1), 8, 8, N).mul_monomial({Cyc(1), 1});
        });

    add(out, "eq3.19", 60, [i](long N) { return phi(N).twist(i); },
        [i](long N) {
            return theta(Cyc(-1), 4, 8, N) + theta(Cyc(-1), 8, 8, N).mul_monomial({i, 1});
        });

    add(out, "eq3.20", 60, [i, al](long N) { return theta_tw(al, 0, i, 1, N); },
        [al](long N) {
            return (Cyc(1) - al) * theta(Cyc(-1), 6, 16, N) +
                   theta(Cyc(-1), 14, 16, N).mul_monomial({-(Cyc(1) + al), 1});
        });

    add(out, "eq3.21", 60, entry4_core_lhs(), [i, s2](long N) {
        return (s2 - Cyc(1) - i) * entry4_x_part(N) +
               entry4_y_part(N).mul_monomial({Cyc(1) + s2 + i, 1});
    });

    add(out, "eq3.22a", 60, [](long N) { return theta(Cyc(-1), 1, 4, N); },
        [](long N) {
            return theta(Cyc(-1), 6, 16, N) +
                   theta(Cyc(-1), 14, 16, N).mul_monomial({Cyc(1), 1});
        });

    add(out, "eq3.22b", 60, [](long N) { return theta(Cyc(-1), 1, 2, N); },
        [](long N) {
            return theta(Cyc(-1), 4, 8, N) + theta(Cyc(-1), 8, 8, N).mul_monomial({Cyc(1), 1});
        });

    add(out, "eq3.23", 60, [](long N) { return entry4_x_part(N); },
        [](long N) { return J24(N) * theta(Cyc(-1), 6, 16, N); });

    add(out, "eq3.24", 60, [](long N) { return entry4_y_part(N); },
        [](long N) { return Cyc(-1) * J24(N) * theta(Cyc(-1), 14, 16, N); });

    add(out, "eq3.25", 60,
        [i, s2](long N) {
            return (s2 - Cyc(1) - i) * entry4_x_part(N) +
                   entry4_y_part(N).mul_monomial({Cyc(1) + s2 + i, 1});
        },
        [i, al, s2](long N) { return s2 * J24(N) * theta_tw(al, 0, i, 1, N); });
}

// ---------- assembly ----------

std::vector<Monomial> default_entry1_samples() {
    return {{zeta(1), 0}, {zeta(2), 0}, {zeta(4), 0}, {zeta(5), 0}, {zeta(1), 1}};
}

std::vector<Monomial> default_entry2_samples() {
    return {{zeta(1), 0}, {zeta(2), 0}, {zeta(4), 0}};
}

QSeries eval_to(const Builder& side, long N) {
    long target = N;
    for (int attempt = 0; attempt < 6; ++attempt) {
        QSeries out = side(target);
        if (out.order() >= N) return out.truncate(N);
        target += (N - out.order()) + 4;
    }
    raise(ErrorCode::OutOfRange, "expression did not reach the requested order");
}

CheckReport merge_reports(std::string id, long order, const std::vector<CheckReport>& parts) {
    CheckReport merged;
    merged.id = std::move(id);
    merged.order = order;
    merged.status = CheckStatus::Pass;
    for (const CheckReport& part : parts) {
        merged.elapsed_ms += part.elapsed_ms;
        if (part.status == CheckStatus::Fail && merged.status != CheckStatus::Fail) {
            merged.status = CheckStatus::Fail;
            merged.mismatch = part.mismatch;
            merged.error.clear();
        } else if (part.status == CheckStatus::Error && merged.status == CheckStatus::Pass) {
            merged.status = CheckStatus::Error;
            merged.error = part.error;
        }
    }
    return merged;
}

CheckReport run_merged(const std::string& id, const std::vector<IdentityCheck>& checks,
                       long order) {
    std::vector<CheckReport> parts;
    parts.reserve(checks.size());
    for (const IdentityCheck& check : checks) parts.push_back(run_check(check, order));
    long effective = order == 0 ? (checks.empty() ? 0 : checks.front().default_order) : order;
    return merge_reports(id, effective, parts);
}

}  // namespace

std::string status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Error: return "error";
    }
    return "error";
}

std::vector<IdentityCheck> catalogue(const std::string& suite, const SuiteOptions& options) {
    const auto e1 = options.entry1_samples.empty() ? default_entry1_samples()
                                                   : options.entry1_samples;
    const auto e2 = options.entry2_samples.empty() ? default_entry2_samples()
                                                   : options.entry2_samples;
    std::vector<IdentityCheck> out;
    if (suite == "all" || suite == "prelim") append_prelim(out);
    if (suite == "all" || suite == "props") append_props(out);
    if (suite == "all" || suite == "entries" || suite == "entry1")
        for (const Monomial& t : e1) append_entry1(out, t);
    if (suite == "all" || suite == "entries" || suite == "entry2")
        for (const Monomial& t : e2) append_entry2(out, t);
    if (suite == "all" || suite == "entries" || suite == "entry3") append_entry3(out);
    if (suite == "all" || suite == "entries" || suite == "entry4") append_entry4(out);
    if (suite == "all" || suite == "relations") append_relations(out);
    if (out.empty())
        raise(ErrorCode::BadArgument,
              "unknown suite '" + suite +
                  "' (expected all|prelim|props|entries|entry1|entry2|entry3|entry4|relations)");
    return out;
}

CheckReport run_check(const IdentityCheck& check, long order) {
    CheckReport report;
    report.id = check.id;
    report.order = order == 0 ? check.default_order : order;
    auto start = std::chrono::steady_clock::now();
    try {
        if (report.order < 10)
            raise(ErrorCode::BadArgument, "check order must be at least 10");
        QSeries lhs = eval_to(check.lhs, report.order);
        QSeries rhs = eval_to(check.rhs, report.order);
        auto mismatch = first_mismatch(lhs, rhs);
        if (mismatch) {
            report.status = CheckStatus::Fail;
            report.mismatch = mismatch;
        } else {
            report.status = CheckStatus::Pass;
        }
    } catch (const std::exception& err) {
        report.status = CheckStatus::Error;
        report.error = err.what();
    }
    auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

std::vector<CheckReport> run_suite(const std::string& suite, const SuiteOptions& options) {
    auto checks = catalogue(suite, options);
    std::vector<CheckReport> reports(checks.size());
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (size_t k = 0; k < checks.size(); ++k) reports[k] = run_check(checks[k], options.order);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t k; (k = next.fetch_add(1)) < checks.size();)
                reports[k] = run_check(checks[k], options.order);
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    return reports;
}

CheckReport entry1_check(const Monomial& t, long order) {
    std::vector<IdentityCheck> checks;
    append_entry1(checks, t);
    return run_merged("entry1[t=" + t.str() + "]", checks, order);
}

CheckReport entry2_check(const Monomial& t, long order) {
    std::vector<IdentityCheck> checks;
    append_entry2(checks, t);
    return run_merged("entry2[t=" + t.str() + "]", checks, order);
}

CheckReport entry3_check(long order) {
    std::vector<IdentityCheck> checks;
    append_entry3(checks);
    return run_merged("entry3", checks, order);
}

CheckReport entry4_check(long order) {
    std::vector<IdentityCheck> checks;
    append_entry4(checks);
    return run_merged("entry4", checks, order);
}

CheckReport mortenson_check(const std::string& which, const Monomial& x, long order) {
    std::vector<IdentityCheck> checks;
    if (which == "prop2.4")
        append_prop24(checks, x, order == 0 ? 60 : order);
    else if (which == "prop2.5")
        append_prop25(checks, x, order == 0 ? 60 : order);
    else
        raise(ErrorCode::BadArgument, "mortenson_check expects prop2.4 or prop2.5");
    return run_check(checks.front(), order);
}

std::string reports_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckReport& r : reports) {
        nlohmann::json row;
        row["id"] = r.id;
        row["order"] = r.order;
        row["status"] = status_name(r.status);
        if (r.mismatch) {
            auto strings = [](const Cyc& v) {
                auto coords = v.coord_strings();
                return std::vector<std::string>(coords.begin(), coords.end());
            };
            row["mismatch"] = {{"exponent", r.mismatch->exponent},
                               {"lhs", strings(r.mismatch->lhs)},
                               {"rhs", strings(r.mismatch->rhs)}};
        } else {
            row["mismatch"] = nullptr;
        }
        row["error"] = r.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.error);
        row["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(std::move(row));
    }
    return arr.dump(2);
}

bool all_passed(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) {
        return r.status == CheckStatus::Pass;
    });
}

}  // namespace qtheta
