#include "qtheta/cyclotomic.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace qtheta {

void raise(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

namespace {

std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

const std::array<Cyc, 24>& zeta_table() {
    static const std::array<Cyc, 24> table = [] {
        std::array<Cyc, 24> t;
        std::array<Rational, 8> one{};
        one[1] = 1;
        const Cyc z{std::array<Rational, 8>(one)};
        t[0] = Cyc(1);
        for (int k = 1; k < 24; ++k) t[k] = t[k - 1] * z;
        return t;
    }();
    return table;
}

}  // namespace

Cyc Cyc::zeta_pow(long k) {
    long r = k % 24;
    if (r < 0) r += 24;
    return zeta_table()[static_cast<size_t>(r)];
}

Cyc Cyc::embed(const std::string& name) {
    if (name == "i") return zeta_pow(6);
    if (name == "omega") return zeta_pow(8);
    if (name == "alpha") return zeta_pow(3);
    if (name == "sqrt2") return zeta_pow(3) + zeta_pow(-3);
    if (name == "sqrt3") return zeta_pow(2) + zeta_pow(-2);
    if (name == "zeta") return zeta_pow(1);
    raise(ErrorCode::UnknownConstant, "unknown cyclotomic constant '" + name + "'");
}

bool Cyc::is_zero() const {
    for (const auto& r : c_)
        if (r != 0) return false;
    return true;
}

bool Cyc::is_one() const {
    if (c_[0] != 1) return false;
    for (int k = 1; k < 8; ++k)
        if (c_[static_cast<size_t>(k)] != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (int k = 1; k < 8; ++k)
        if (c_[static_cast<size_t>(k)] != 0) return false;
    return true;
}

Cyc Cyc::operator-() const {
    Cyc r;
    for (size_t k = 0; k < 8; ++k) r.c_[k] = -c_[k];
    return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    for (size_t k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    for (size_t k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    std::array<Rational, 15> conv{};
    for (size_t i = 0; i < 8; ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < 8; ++j) {
            if (b.c_[j] == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    // z^d = z^(d-4) - z^(d-8) for d >= 8, applied top down
    for (size_t d = 14; d >= 8; --d) {
        if (conv[d] == 0) continue;
        conv[d - 4] += conv[d];
        conv[d - 8] -= conv[d];
    }
    std::array<Rational, 8> out;
    for (size_t k = 0; k < 8; ++k) out[k] = std::move(conv[k]);
    return Cyc(std::move(out));
}

Cyc Cyc::inv() const {
    if (is_zero()) raise(ErrorCode::ZeroInverse, "inverse of zero in Q(zeta24)");
    // Solve M x = e0 where column j of M holds the coordinates of this * z^j.
    std::array<std::array<Rational, 9>, 8> m;
    for (int j = 0; j < 8; ++j) {
        const Cyc col = *this * zeta_pow(j);
        for (int i = 0; i < 8; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coord(i);
    }
    for (int i = 0; i < 8; ++i) m[static_cast<size_t>(i)][8] = (i == 0) ? 1 : 0;

    for (size_t col = 0; col < 8; ++col) {
        size_t piv = col;
        while (piv < 8 && m[piv][col] == 0) ++piv;
        if (piv == 8) raise(ErrorCode::ZeroInverse, "singular multiplication matrix");
        std::swap(m[piv], m[col]);
        const Rational p = m[col][col];
        for (size_t j = col; j <= 8; ++j) m[col][j] /= p;
        for (size_t row = 0; row < 8; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col];
            for (size_t j = col; j <= 8; ++j) m[row][j] -= f * m[col][j];
        }
    }
    std::array<Rational, 8> x;
    for (size_t k = 0; k < 8; ++k) x[k] = m[k][8];
    return Cyc(std::move(x));
}

Cyc Cyc::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Cyc result(1), base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::complex<double> Cyc::to_complex() const {
    static const double pi = std::acos(-1.0);
    std::complex<double> acc(0.0, 0.0);
    for (int k = 0; k < 8; ++k)
        acc += coord(k).get_d() * std::polar(1.0, pi * k / 12.0);
    return acc;
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    if (is_rational()) return rat_str(c_[0]);
    static const std::array<std::pair<const char*, Cyc>, 5> named = {{
        {"i", embed("i")},
        {"omega", embed("omega")},
        {"alpha", embed("alpha")},
        {"sqrt2", embed("sqrt2")},
        {"sqrt3", embed("sqrt3")},
    }};
    for (const auto& [name, value] : named) {
        const Cyc ratio = *this * value.inv();
        if (!ratio.is_rational()) continue;
        const Rational& r = ratio.rational_part();
        if (r == 1) return name;
        if (r == -1) return std::string("-") + name;
        return rat_str(r) + "*" + name;
    }
    std::string out;
    bool first = true;
    for (int k = 0; k < 8; ++k) {
        const Rational& r = c_[static_cast<size_t>(k)];
        if (r == 0) continue;
        const bool neg = r < 0;
        const Rational mag = neg ? Rational(-r) : r;
        std::string body;
        if (k == 0) body = rat_str(mag);
        else {
            const std::string power = (k == 1) ? "z" : "z^" + std::to_string(k);
            body = (mag == 1) ? power : rat_str(mag) + "*" + power;
        }
        if (first) out = (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::array<std::string, 8> Cyc::coord_strings() const {
    std::array<std::string, 8> out;
    for (int k = 0; k < 8; ++k) {
        const Rational& r = c_[static_cast<size_t>(k)];
        out[static_cast<size_t>(k)] = r.get_num().get_str() + "/" + r.get_den().get_str();
    }
    return out;
}

Cyc Cyc::from_coord_strings(const std::array<std::string, 8>& coords) {
    std::array<Rational, 8> c;
    for (size_t k = 0; k < 8; ++k) {
        try {
            Rational r(coords[k]);
            if (r.get_den() == 0)
                raise(ErrorCode::BadArgument, "zero denominator in '" + coords[k] + "'");
            r.canonicalize();
            c[k] = std::move(r);
        } catch (const std::invalid_argument&) {
            raise(ErrorCode::BadArgument, "bad rational literal '" + coords[k] + "'");
        }
    }
    return Cyc(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

}  // namespace qtheta
