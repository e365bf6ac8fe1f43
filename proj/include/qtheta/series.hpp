#pragma once

// Truncated Laurent series over Q(zeta24) with explicit precision tracking.
// A QSeries stores coefficients for exponents [valuation, order] and guarantees
// every coefficient with exponent <= order is exact. Operations propagate the
// guaranteed order:
//   add:      min(Nf, Ng)
//   mul:      min(Nf + vg, Ng + vf)
//   invert:   Nf - 2*vf           (leading coefficient must be nonzero)
//   subst q^k: k*Nf + (k-1)
//   twist:    unchanged
// The zero series keeps an order and reports valuation order+1.

#include <optional>
#include <string>
#include <vector>

#include "qtheta/cyclotomic.hpp"

namespace qtheta {

// c * q^e with c in Q(zeta24).
struct Monomial {
    Cyc c;
    long e = 0;

    Monomial() = default;
    Monomial(Cyc coeff, long exp) : c(std::move(coeff)), e(exp) {}

    bool is_zero() const { return c.is_zero(); }
    Monomial inverse() const { return {c.inv(), -e}; }
    Monomial pow(long k) const { return {c.pow(k), e * k}; }
    Monomial operator*(const Monomial& o) const { return {c * o.c, e + o.e}; }
    Monomial operator-() const { return {-c, e}; }
    // Monomial image under q -> u*q.
    Monomial twisted(const Cyc& u) const { return {c * u.pow(e), e}; }
    std::string str() const;
};

class QSeries {
public:
    static QSeries zero(long order);
    static QSeries one(long order);
    static QSeries monomial(const Monomial& m, long order);
    static QSeries q_power(long e, long order) { return monomial({Cyc(1), e}, order); }

    long order() const { return order_; }
    long valuation() const { return a_.empty() ? order_ + 1 : val_; }
    bool is_zero() const { return a_.empty(); }
    // Coefficient of q^n; zero outside the stored run, BadArgument for n > order.
    const Cyc& coeff(long n) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& f, const QSeries& g);
    friend QSeries operator-(const QSeries& f, const QSeries& g);
    friend QSeries operator*(const QSeries& f, const QSeries& g);
    friend QSeries operator*(const Cyc& c, const QSeries& f);  // order unchanged

    QSeries mul_monomial(const Monomial& m) const;  // order shifts by m.e
    QSeries invert() const;
    QSeries pow(long k) const;  // k >= 0
    QSeries subst_q_power(long k) const;
    QSeries twist(const Cyc& u) const;
    // Lower the guaranteed order to n (n <= order).
    QSeries truncate(long n) const;

    std::string str() const;
    std::string json_str() const;

private:
    QSeries(long val, long order, std::vector<Cyc> coeffs);
    void normalize();

    friend QSeries geom_factor_inverse(const Monomial& m, long N);
    friend QSeries pochhammer_inf(const Monomial& first, long step, long N);
    friend QSeries trinomial_product(const Cyc& a, long N);

    long val_ = 1;
    long order_ = 0;
    std::vector<Cyc> a_;
};

QSeries operator/(const QSeries& f, const QSeries& g);

// (1 - c q^e)^-1 to order N. For e < 0 the expansion is
// -c^-1 q^-e (1 + c^-1 q^-e + ...), a series with positive valuation -e.
// Raises PoleAtFactor when e = 0 and c = 1.
QSeries geom_factor_inverse(const Monomial& m, long N);

// prod_{k>=0} (1 - c q^{e+k*step}) to order N; e >= 0, step >= 1.
// A vanishing factor (c = 1 hitting exponent 0) yields the zero series.
QSeries pochhammer_inf(const Monomial& first, long step, long N);

// prod_{n>=1} (1 + a q^n + q^{2n}) to order N.
QSeries trinomial_product(const Cyc& a, long N);
QSeries trinomial_product_inverse(const Cyc& a, long N);

struct Mismatch {
    long exponent = 0;
    Cyc lhs, rhs;
};

// Coefficient-wise comparison up to min(f.order, g.order).
bool agree(const QSeries& f, const QSeries& g);
std::optional<Mismatch> first_mismatch(const QSeries& f, const QSeries& g);
inline bool operator==(const QSeries& f, const QSeries& g) { return agree(f, g); }

}  // namespace qtheta
