#pragma once

// The theta block j(x; q^m) = (x; q^m)_inf (q^m/x; q^m)_inf (q^m; q^m)_inf for
// monomial x = c q^e, together with its bilateral-sum form
//   j(x; q^m) = sum_k (-1)^k q^{m k(k-1)/2} x^k
// and the classical J_{a,m} / Jbar_{a,m} / J_m shorthands. The product route
// first moves e into [0, m) with j(q^m x; q^m) = -x^{-1} j(x; q^m), tracking
// the accumulated monomial prefactor exactly. Arguments that reduce to an
// integral power of q^m give the zero series.

#include "qtheta/series.hpp"

namespace qtheta {

struct ThetaSpec {
    Monomial x;
    long m = 1;  // base q^m, m >= 1

    ThetaSpec(Monomial arg, long modulus) : x(std::move(arg)), m(modulus) {}
    std::string str() const;
};

QSeries theta_j_product(const ThetaSpec& spec, long N);
QSeries theta_j_sum(const ThetaSpec& spec, long N);

inline QSeries theta_j(const ThetaSpec& spec, long N) { return theta_j_product(spec, N); }
inline QSeries theta_j(const Monomial& x, long m, long N) { return theta_j_product({x, m}, N); }

// j(x; (u q)^m) as a series in q.
QSeries theta_j_twisted(const Monomial& x, const Cyc& u, long m, long N);

// Split of j(x; q^m) into `parts` residue classes:
//   sum_{k=0}^{p-1} (-1)^k q^{m k(k-1)/2} x^k j((-1)^{p+1} q^{m(p(p-1)/2 + pk)} x^p; q^{m p^2})
QSeries theta_j_dissected(const ThetaSpec& spec, long parts, long N);

// Exact q-valuation of j(x; q^m) without expanding it; raises NonInvertible
// when the theta vanishes identically (x an integral power of q^m).
long theta_j_valuation(const ThetaSpec& spec);

QSeries J(long a, long m, long N);     // j(q^a; q^m)
QSeries Jbar(long a, long m, long N);  // j(-q^a; q^m)
QSeries Jm(long m, long N);            // (q^m; q^m)_inf

QSeries phi(long N);  // sum over n in Z of q^{n^2}
QSeries psi(long N);  // sum over n >= 0 of q^{n(n+1)/2}
QSeries phi_product(long N);  // J2^5 / (J1^2 J4^2)
QSeries psi_product(long N);  // J2^2 / J1

}  // namespace qtheta
