#pragma once

// The universal mock theta function
//   g(x; q^s) = x^{-1} ( -1 + sum_{n>=0} q^{s n^2} / ((x; q^s)_{n+1} (q^s/x; q^s)_n) ),
// the rank generating function
//   G(x, q) = sum_{n>=0} q^{n^2} / ((qx; q)_n (q/x; q)_n),
// the trinomial-denominator family
//   f_a(q) = sum_{n>=0} q^{n^2} / prod_{k=1}^{n} (1 + a q^k + q^{2k}),
// and the Appell-Lerch sum
//   m(x, q^s, z) = j(z; q^s)^{-1} sum_{r in Z} (-1)^r q^{s r(r-1)/2} z^r / (1 - x z q^{s(r-1)}).
//
// Arguments x, z are monomials c q^e with cyclotomic coefficient. Evaluations
// that hit a genuine pole (a vanishing geometric factor or a vanishing theta
// divisor) raise, so that callers can report non-generic parameter choices.
// The *_twisted variants evaluate at base u q instead of q by pulling the
// twist through the argument: h(c q^e; u q) = twist(h(c u^{-e} q^e; q), u).

#include "qtheta/thetas.hpp"

namespace qtheta {

QSeries g_mock(const Monomial& x, long N, long base = 1);
QSeries g_mock_twisted(const Monomial& x, const Cyc& u, long base, long N);

QSeries G_rank(const Monomial& x, long N);
QSeries G_rank_twisted(const Monomial& x, const Cyc& u, long N);

QSeries f_a(const Cyc& a, long N);

struct AppellSpec {
    Monomial x;
    Monomial z;
    long base = 1;

    std::string str() const;
};

QSeries appell_m(const AppellSpec& spec, long N);

}  // namespace qtheta
