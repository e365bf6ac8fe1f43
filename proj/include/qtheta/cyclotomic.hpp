#pragma once

// Exact arithmetic in the cyclotomic field Q(z), z = exp(i*pi/12), a primitive
// 24th root of unity. Elements are stored in the power basis 1, z, ..., z^7;
// the minimal polynomial is z^8 = z^4 - 1. Rational coordinates are GMP
// rationals, always canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qtheta {

using Rational = mpq_class;

enum class ErrorCode {
    ZeroInverse,
    UnknownConstant,
    NonInvertible,
    PoleAtFactor,
    NegativeExponent,
    OutOfRange,
    ParseError,
    BadArgument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const noexcept { return code_; }
    // True for the codes raised by a vanishing divisor at a non-generic sample point.
    bool genericity_violation() const noexcept {
        return code_ == ErrorCode::ZeroInverse || code_ == ErrorCode::NonInvertible ||
               code_ == ErrorCode::PoleAtFactor;
    }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& msg);

class Cyc {
public:
    Cyc() = default;
    Cyc(long n) { c_[0] = n; }             // NOLINT: implicit by design
    Cyc(const Rational& r) {               // NOLINT: implicit by design
        c_[0] = r;
        c_[0].canonicalize();
    }
    explicit Cyc(std::array<Rational, 8> coords) : c_(std::move(coords)) {
        for (auto& r : c_) r.canonicalize();
    }

    // z^k for any integer k (k reduced mod 24).
    static Cyc zeta_pow(long k);
    // Named constants: "i", "omega" (= z^8), "alpha" (= z^3), "sqrt2", "sqrt3", "zeta".
    // Raises UnknownConstant for anything else.
    static Cyc embed(const std::string& name);

    const Rational& coord(int k) const { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;             // coordinates 1..7 all zero
    const Rational& rational_part() const { return c_[0]; }

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    // Multiplicative inverse; raises ZeroInverse on 0.
    Cyc inv() const;
    // Integer power, negative exponents via inv().
    Cyc pow(long k) const;

    std::complex<double> to_complex() const;

    // Symbolic rendering: rational multiples of 1, i, omega, alpha, sqrt2, sqrt3
    // print under those names; anything else prints as a polynomial in z.
    std::string str() const;
    // Canonical coordinate serialization: 8 strings "p/q" ("0/1" for zero).
    std::array<std::string, 8> coord_strings() const;
    static Cyc from_coord_strings(const std::array<std::string, 8>& coords);

    friend std::ostream& operator<<(std::ostream& os, const Cyc& c);

private:
    std::array<Rational, 8> c_{};  // value-initialized: all zero
};

inline Cyc operator*(long n, const Cyc& c) { return Cyc(n) * c; }

}  // namespace qtheta
