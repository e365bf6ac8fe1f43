#include "qtheta/mock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qtheta {

namespace {

Monomial pulled_through(const Monomial& x, const Cyc& u) {
    return {x.c * u.pow(-x.e), x.e};
}

}  // namespace

QSeries g_mock(const Monomial& x, long N, long base) {
    if (base < 1) raise(ErrorCode::BadArgument, "g_mock base must be positive");
    if (x.c.is_zero()) raise(ErrorCode::BadArgument, "g_mock argument must be nonzero");
    const long s = base;
    const long M = N + std::max(0L, x.e);
    // -1 + sum over n of q^{s n^2} / ((x; q^s)_{n+1} (q^s/x; q^s)_n), built
    // incrementally: each n adds one factor to each pochhammer.
    QSeries acc = -QSeries::one(M);
    QSeries partial = geom_factor_inverse({x.c, x.e}, M);
    acc = acc + partial;
    for (long n = 1; s * n * n <= M; ++n) {
        partial = partial * geom_factor_inverse({x.c, x.e + s * n}, M) *
                  geom_factor_inverse({x.c.inv(), s - x.e + s * (n - 1)}, M);
        acc = acc + partial.mul_monomial({Cyc(1), s * n * n}).truncate(M);
    }
    return acc.mul_monomial(x.inverse()).truncate(N);
}

QSeries g_mock_twisted(const Monomial& x, const Cyc& u, long base, long N) {
    return g_mock(pulled_through(x, u), N, base).twist(u);
}

QSeries G_rank(const Monomial& x, long N) {
    if (x.c.is_zero()) raise(ErrorCode::BadArgument, "G_rank argument must be nonzero");
    QSeries acc = QSeries::one(N);
    QSeries partial = QSeries::one(N);
    for (long n = 1; n * n <= N; ++n) {
        partial = partial * geom_factor_inverse({x.c, n + x.e}, N) *
                  geom_factor_inverse({x.c.inv(), n - x.e}, N);
        acc = acc + partial.mul_monomial({Cyc(1), n * n}).truncate(N);
    }
    return acc;
}

QSeries G_rank_twisted(const Monomial& x, const Cyc& u, long N) {
    return G_rank(pulled_through(x, u), N).twist(u);
}

QSeries f_a(const Cyc& a, long N) {
    QSeries acc = QSeries::one(N);
    QSeries partial = QSeries::one(N);
    for (long n = 1; n * n <= N; ++n) {
        QSeries factor = QSeries::one(N) + QSeries::monomial({a, n}, N) +
                         QSeries::monomial({Cyc(1), 2 * n}, N);
        partial = partial * factor.invert();
        acc = acc + partial.mul_monomial({Cyc(1), n * n}).truncate(N);
    }
    return acc;
}

std::string AppellSpec::str() const {
    return "m(" + x.str() + ", q^" + std::to_string(base) + ", " + z.str() + ")";
}

QSeries appell_m(const AppellSpec& spec, long N) {
    if (spec.base < 1) raise(ErrorCode::BadArgument, "appell base must be positive");
    if (spec.x.c.is_zero() || spec.z.c.is_zero())
        raise(ErrorCode::BadArgument, "appell arguments must be nonzero");
    const long s = spec.base;
    const long ex = spec.x.e, ez = spec.z.e;
    const Cyc cxz = spec.x.c * spec.z.c;

    // A single r can make the geometric factor an exact pole; detect it even
    // when that term lies outside the current window.
    if (cxz.is_one() && (ex + ez) % s == 0)
        raise(ErrorCode::PoleAtFactor, "pole: a bilateral term of " + spec.str() + " divides by zero");

    const long vj = theta_j_valuation({spec.z, s});  // raises when j(z; q^s) = 0
    long slack = 2 * std::abs(vj) + 8;
    for (int attempt = 0; attempt < 6; ++attempt, slack *= 2) {
        const long M = N + slack;
        double b = 1.5 * s + std::abs(static_cast<double>(ez));
        double cbound = static_cast<double>(s + std::abs(ex) + std::abs(ez));
        long R = static_cast<long>((b + std::sqrt(b * b + 2.0 * s * (M + cbound))) / s) + 3;
        QSeries sum = QSeries::zero(M);
        for (long r = -R; r <= R; ++r) {
            const long E = s * (r - 1) + ex + ez;
            const long shift = s * r * (r - 1) / 2 + ez * r;
            if (shift + std::max(0L, -E) > M) continue;
            Cyc coeff = spec.z.c.pow(r);
            if (r % 2 != 0) coeff = -coeff;
            QSeries term = geom_factor_inverse({cxz, E}, std::max(M, M - shift));
            sum = sum + term.mul_monomial({coeff, shift}).truncate(M);
        }
        QSeries jz = theta_j({spec.z, s}, M + 2 * std::abs(vj) + 2);
        QSeries total = sum * jz.invert();
        if (total.order() >= N) return total.truncate(N);
    }
    raise(ErrorCode::OutOfRange, "appell window sizing failed for " + spec.str());
}

}  // namespace qtheta
