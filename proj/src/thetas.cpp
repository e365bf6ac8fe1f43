#include "qtheta/thetas.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace qtheta {

namespace {

struct NormalizedTheta {
    Monomial prefactor;  // j(original) = prefactor * j(c q^e; q^m)
    Cyc c;
    long e;  // in [0, m)
};

NormalizedTheta normalize(const ThetaSpec& spec) {
    if (spec.m < 1) raise(ErrorCode::BadArgument, "theta base exponent must be positive");
    if (spec.x.c.is_zero()) raise(ErrorCode::BadArgument, "theta argument must be nonzero");
    NormalizedTheta n{Monomial{Cyc(1), 0}, spec.x.c, spec.x.e};
    while (n.e >= spec.m) {
        // j(c q^e; q^m) = (-c^{-1} q^{m-e}) j(c q^{e-m}; q^m)
        n.prefactor = n.prefactor * Monomial{-n.c.inv(), spec.m - n.e};
        n.e -= spec.m;
    }
    while (n.e < 0) {
        // j(c q^e; q^m) = (-c q^e) j(c q^{e+m}; q^m)
        n.prefactor = n.prefactor * Monomial{-n.c, n.e};
        n.e += spec.m;
    }
    return n;
}

}  // namespace

std::string ThetaSpec::str() const {
    return "j(" + x.str() + "; q^" + std::to_string(m) + ")";
}

QSeries theta_j_product(const ThetaSpec& spec, long N) {
    NormalizedTheta n = normalize(spec);
    long M = std::max(N, N - n.prefactor.e);
    if (n.e == 0 && n.c.is_one()) return QSeries::zero(N);  // (1;q^m)_inf kills the product
    QSeries p1 = pochhammer_inf({n.c, n.e}, spec.m, M);
    QSeries p2 = pochhammer_inf({n.c.inv(), spec.m - n.e}, spec.m, M);
    QSeries p3 = pochhammer_inf({Cyc(1), spec.m}, spec.m, M);
    QSeries out = (p1 * p2 * p3).mul_monomial(n.prefactor);
    return out.truncate(std::min(out.order(), N));
}

QSeries theta_j_sum(const ThetaSpec& spec, long N) {
    if (spec.m < 1) raise(ErrorCode::BadArgument, "theta base exponent must be positive");
    const Cyc& c = spec.x.c;
    const long e = spec.x.e;
    const long m = spec.m;
    // exponent of term k is E(k) = m k(k-1)/2 + e k, convex in k
    double disc = std::sqrt(std::pow(0.5 * m + std::abs(static_cast<double>(e)), 2.0) +
                            2.0 * m * std::max<long>(N, 0));
    long K = static_cast<long>((0.5 * m + std::abs(static_cast<double>(e)) + disc) / m) + 2;
    QSeries out = QSeries::zero(N);
    for (long k = -K; k <= K; ++k) {
        long E = m * k * (k - 1) / 2 + e * k;
        if (E > N) continue;
        Cyc coeff = c.pow(k);
        if (k % 2 != 0) coeff = -coeff;
        out = out + QSeries::monomial({coeff, E}, N);
    }
    return out;
}

long theta_j_valuation(const ThetaSpec& spec) {
    NormalizedTheta n = normalize(spec);
    if (n.e == 0 && n.c.is_one())
        raise(ErrorCode::NonInvertible, "theta " + spec.str() + " vanishes identically");
    return n.prefactor.e;
}

QSeries theta_j_twisted(const Monomial& x, const Cyc& u, long m, long N) {
    Monomial pulled{x.c * u.pow(-x.e), x.e};
    return theta_j({pulled, m}, N).twist(u);
}

QSeries theta_j_dissected(const ThetaSpec& spec, long parts, long N) {
    if (parts < 1) raise(ErrorCode::BadArgument, "parts must be positive");
    const Cyc& c = spec.x.c;
    const long e = spec.x.e;
    const long m = spec.m;
    const long p = parts;
    std::vector<Monomial> shifts;
    long min_shift = 0;
    for (long k = 0; k < p; ++k) {
        Cyc coeff = c.pow(k);
        if (k % 2 != 0) coeff = -coeff;
        Monomial s{coeff, m * k * (k - 1) / 2 + e * k};
        min_shift = std::min(min_shift, s.e);
        shifts.push_back(s);
    }
    long M = N - min_shift;
    Cyc inner_c = c.pow(p);
    if (p % 2 == 0) inner_c = -inner_c;  // (-1)^{p+1} c^p
    QSeries acc = QSeries::zero(N);
    for (long k = 0; k < p; ++k) {
        long inner_e = m * (p * (p - 1) / 2 + p * k) + p * e;
        QSeries part = theta_j({Monomial{inner_c, inner_e}, m * p * p}, M);
        acc = acc + part.mul_monomial(shifts[static_cast<size_t>(k)]).truncate(N);
    }
    return acc;
}

QSeries J(long a, long m, long N) { return theta_j({Monomial{Cyc(1), a}, m}, N); }
QSeries Jbar(long a, long m, long N) { return theta_j({Monomial{Cyc(-1), a}, m}, N); }
QSeries Jm(long m, long N) { return pochhammer_inf({Cyc(1), m}, m, N); }

QSeries phi(long N) {
    QSeries out = QSeries::monomial({Cyc(1), 0}, N);
    for (long n = 1; n * n <= N; ++n) out = out + QSeries::monomial({Cyc(2), n * n}, N);
    return out;
}

QSeries psi(long N) {
    QSeries out = QSeries::zero(N);
    for (long n = 0; n * (n + 1) / 2 <= N; ++n)
        out = out + QSeries::monomial({Cyc(1), n * (n + 1) / 2}, N);
    return out;
}

QSeries phi_product(long N) {
    return Jm(2, N).pow(5) * (Jm(1, N).pow(2) * Jm(4, N).pow(2)).invert();
}

QSeries psi_product(long N) { return Jm(2, N).pow(2) * Jm(1, N).invert(); }

}  // namespace qtheta
