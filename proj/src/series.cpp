#include "qtheta/series.hpp"

#include <algorithm>

#include "json.hpp"

namespace qtheta {

namespace {

const Cyc kZero{};

// Coefficient text next to q^n: sign split off when the coefficient renders as
// a single product, parenthesized otherwise.
struct TermText {
    bool neg = false;
    std::string text;
};

TermText render_term(const Cyc& c, long n) {
    std::string s = c.str();
    bool neg = false;
    const bool simple = s.find(' ') == std::string::npos;
    if (simple && s[0] == '-') {
        neg = true;
        s = s.substr(1);
    } else if (!simple) {
        s = "(" + s + ")";
    }
    std::string body;
    if (n == 0) body = s;
    else {
        const std::string qp = (n == 1) ? "q" : "q^" + std::to_string(n);
        body = (s == "1") ? qp : s + "*" + qp;
    }
    return {neg, body};
}

}  // namespace

std::string Monomial::str() const {
    const TermText t = render_term(c, e);
    return (t.neg ? "-" : "") + t.text;
}

QSeries::QSeries(long val, long order, std::vector<Cyc> coeffs)
    : val_(val), order_(order), a_(std::move(coeffs)) {
    normalize();
}

void QSeries::normalize() {
    size_t lead = 0;
    while (lead < a_.size() && a_[lead].is_zero()) ++lead;
    if (lead > 0) {
        val_ += static_cast<long>(lead);
        a_.erase(a_.begin(), a_.begin() + static_cast<long>(lead));
    }
    if (!a_.empty() && val_ + static_cast<long>(a_.size()) - 1 > order_) {
        const long keep = order_ - val_ + 1;
        a_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
    }
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
    if (a_.empty()) val_ = order_ + 1;
}

QSeries QSeries::zero(long order) { return QSeries(order + 1, order, {}); }

QSeries QSeries::one(long order) { return monomial({Cyc(1), 0}, order); }

QSeries QSeries::monomial(const Monomial& m, long order) {
    if (m.c.is_zero() || m.e > order) return zero(order);
    return QSeries(m.e, order, {m.c});
}

const Cyc& QSeries::coeff(long n) const {
    if (n > order_)
        raise(ErrorCode::BadArgument,
              "coefficient of q^" + std::to_string(n) + " beyond guaranteed order " +
                  std::to_string(order_));
    if (a_.empty() || n < val_ || n >= val_ + static_cast<long>(a_.size())) return kZero;
    return a_[static_cast<size_t>(n - val_)];
}

QSeries QSeries::operator-() const {
    std::vector<Cyc> out(a_.size());
    for (size_t k = 0; k < a_.size(); ++k) out[k] = -a_[k];
    return QSeries(val_, order_, std::move(out));
}

QSeries operator+(const QSeries& f, const QSeries& g) {
    const long order = std::min(f.order_, g.order_);
    const long lo = std::min(f.valuation(), g.valuation());
    if (lo > order) return QSeries::zero(order);
    std::vector<Cyc> out(static_cast<size_t>(order - lo + 1));
    auto pour = [&](const QSeries& s) {
        for (size_t k = 0; k < s.a_.size(); ++k) {
            const long n = s.val_ + static_cast<long>(k);
            if (n > order) break;
            out[static_cast<size_t>(n - lo)] += s.a_[k];
        }
    };
    pour(f);
    pour(g);
    return QSeries(lo, order, std::move(out));
}

QSeries operator-(const QSeries& f, const QSeries& g) { return f + (-g); }

QSeries operator*(const QSeries& f, const QSeries& g) {
    const long order = std::min(f.order_ + g.valuation(), g.order_ + f.valuation());
    if (f.a_.empty() || g.a_.empty()) return QSeries::zero(order);
    const long base = f.val_ + g.val_;
    std::vector<Cyc> out(static_cast<size_t>(order - base + 1));
    for (size_t i = 0; i < f.a_.size(); ++i) {
        if (f.a_[i].is_zero()) continue;
        const long off = static_cast<long>(i);
        const long jmax =
            std::min<long>(static_cast<long>(g.a_.size()) - 1, order - base - off);
        for (long j = 0; j <= jmax; ++j) {
            if (g.a_[static_cast<size_t>(j)].is_zero()) continue;
            out[static_cast<size_t>(off + j)] += f.a_[i] * g.a_[static_cast<size_t>(j)];
        }
    }
    return QSeries(base, order, std::move(out));
}

QSeries operator*(const Cyc& c, const QSeries& f) {
    if (c.is_zero()) return QSeries::zero(f.order_);
    std::vector<Cyc> out(f.a_.size());
    for (size_t k = 0; k < f.a_.size(); ++k) out[k] = c * f.a_[k];
    return QSeries(f.val_, f.order_, std::move(out));
}

QSeries QSeries::mul_monomial(const Monomial& m) const {
    if (m.c.is_zero()) return zero(order_ + m.e);
    std::vector<Cyc> out(a_.size());
    for (size_t k = 0; k < a_.size(); ++k) out[k] = m.c * a_[k];
    return QSeries(val_ + m.e, order_ + m.e, std::move(out));
}

QSeries QSeries::invert() const {
    if (a_.empty())
        raise(ErrorCode::NonInvertible, "series is zero up to its guaranteed order");
    const long v = val_;
    const long rel = order_ - v;  // relative order of the unit part
    const Cyc lead_inv = a_[0].inv();
    std::vector<Cyc> b(static_cast<size_t>(rel + 1));
    b[0] = lead_inv;
    for (long n = 1; n <= rel; ++n) {
        Cyc acc;
        const long kmax = std::min<long>(n, static_cast<long>(a_.size()) - 1);
        for (long k = 1; k <= kmax; ++k) {
            if (a_[static_cast<size_t>(k)].is_zero()) continue;
            acc += a_[static_cast<size_t>(k)] * b[static_cast<size_t>(n - k)];
        }
        b[static_cast<size_t>(n)] = acc.is_zero() ? Cyc(0) : -(lead_inv * acc);
    }
    return QSeries(-v, order_ - 2 * v, std::move(b));
}

QSeries QSeries::pow(long k) const {
    if (k < 0) raise(ErrorCode::BadArgument, "pow expects a nonnegative exponent");
    QSeries acc = one(order_);
    for (long j = 0; j < k; ++j) acc = acc * *this;
    return acc;
}

QSeries QSeries::subst_q_power(long k) const {
    if (k < 1) raise(ErrorCode::BadArgument, "subst_q_power expects k >= 1");
    const long order = k * order_ + (k - 1);
    if (a_.empty()) return zero(order);
    std::vector<Cyc> out(static_cast<size_t>((a_.size() - 1) * static_cast<size_t>(k) + 1));
    for (size_t j = 0; j < a_.size(); ++j) out[j * static_cast<size_t>(k)] = a_[j];
    return QSeries(k * val_, order, std::move(out));
}

QSeries QSeries::twist(const Cyc& u) const {
    if (u.is_zero()) raise(ErrorCode::BadArgument, "twist by zero");
    if (a_.empty()) return *this;
    std::vector<Cyc> out(a_.size());
    Cyc factor = u.pow(val_);
    for (size_t k = 0; k < a_.size(); ++k) {
        out[k] = factor * a_[k];
        factor = factor * u;
    }
    return QSeries(val_, order_, std::move(out));
}

QSeries QSeries::truncate(long n) const {
    if (n > order_)
        raise(ErrorCode::BadArgument, "truncate cannot raise the guaranteed order");
    return QSeries(a_.empty() ? n + 1 : val_, n, a_);
}

QSeries operator/(const QSeries& f, const QSeries& g) { return f * g.invert(); }

QSeries geom_factor_inverse(const Monomial& m, long N) {
    if (m.c.is_zero()) return QSeries::one(N);
    if (m.e == 0) {
        if (m.c.is_one())
            raise(ErrorCode::PoleAtFactor, "pole: factor (1 - " + m.str() + ") vanishes");
        return QSeries::monomial({(Cyc(1) - m.c).inv(), 0}, N);
    }
    if (m.e > 0) {
        if (m.e > N) return QSeries::one(N);
        std::vector<Cyc> out(static_cast<size_t>(N + 1));
        Cyc p(1);
        for (long k = 0; k * m.e <= N; ++k) {
            out[static_cast<size_t>(k * m.e)] = p;
            p = p * m.c;
        }
        return QSeries(0, N, std::move(out));
    }
    // e < 0: -c^-1 q^-e (1 + c^-1 q^-e + ...)
    const long step = -m.e;
    const Cyc ci = m.c.inv();
    if (step > N) return QSeries::zero(N);
    std::vector<Cyc> out(static_cast<size_t>(N - step + 1));
    Cyc p = -ci;
    for (long j = 1; j * step <= N; ++j) {
        out[static_cast<size_t>(j * step - step)] = p;
        p = p * ci;
    }
    return QSeries(step, N, std::move(out));
}

QSeries pochhammer_inf(const Monomial& first, long step, long N) {
    if (step < 1) raise(ErrorCode::BadArgument, "pochhammer_inf expects step >= 1");
    if (first.e < 0)
        raise(ErrorCode::NegativeExponent,
              "pochhammer_inf expects a nonnegative starting exponent, got " +
                  std::to_string(first.e));
    if (first.c.is_zero()) return QSeries::one(N);
    if (N < 0) return QSeries::zero(N);
    std::vector<Cyc> dense(static_cast<size_t>(N + 1));
    dense[0] = 1;
    for (long ek = first.e; ek <= N; ek += step) {
        if (ek == 0) {
            if (first.c.is_one()) return QSeries::zero(N);  // vanishing factor
            for (auto& d : dense) d = (Cyc(1) - first.c) * d;
            continue;
        }
        for (long n = N; n >= ek; --n) {
            const Cyc& low = dense[static_cast<size_t>(n - ek)];
            if (low.is_zero()) continue;
            dense[static_cast<size_t>(n)] -= first.c * low;
        }
    }
    return QSeries(0, N, std::move(dense));
}

QSeries trinomial_product(const Cyc& a, long N) {
    if (N < 0) return QSeries::zero(N);
    std::vector<Cyc> dense(static_cast<size_t>(N + 1));
    dense[0] = 1;
    for (long n = 1; n <= N; ++n) {
        for (long m = N; m >= n; --m) {
            Cyc add;
            if (!a.is_zero() && !dense[static_cast<size_t>(m - n)].is_zero())
                add += a * dense[static_cast<size_t>(m - n)];
            if (m >= 2 * n) add += dense[static_cast<size_t>(m - 2 * n)];
            if (!add.is_zero()) dense[static_cast<size_t>(m)] += add;
        }
    }
    return QSeries(0, N, std::move(dense));
}

QSeries trinomial_product_inverse(const Cyc& a, long N) {
    return trinomial_product(a, N).invert();
}

bool agree(const QSeries& f, const QSeries& g) { return !first_mismatch(f, g).has_value(); }

std::optional<Mismatch> first_mismatch(const QSeries& f, const QSeries& g) {
    const long order = std::min(f.order(), g.order());
    const long lo = std::min(f.valuation(), g.valuation());
    for (long n = lo; n <= order; ++n) {
        const Cyc& a = f.coeff(n);
        const Cyc& b = g.coeff(n);
        if (a != b) return Mismatch{n, a, b};
    }
    return std::nullopt;
}

std::string QSeries::str() const {
    std::string out;
    if (a_.empty()) out = "0";
    else {
        bool first = true;
        for (size_t k = 0; k < a_.size(); ++k) {
            if (a_[k].is_zero()) continue;
            const TermText t = render_term(a_[k], val_ + static_cast<long>(k));
            if (first) out = (t.neg ? "-" : "") + t.text;
            else out += (t.neg ? " - " : " + ") + t.text;
            first = false;
        }
    }
    return out + " + O(q^" + std::to_string(order_ + 1) + ")";
}

std::string QSeries::json_str() const {
    nlohmann::json j;
    j["valuation"] = valuation();
    j["order"] = order_;
    auto coeffs = nlohmann::json::array();
    for (long n = valuation(); n <= order_; ++n) {
        auto arr = nlohmann::json::array();
        for (const auto& s : coeff(n).coord_strings()) arr.push_back(s);
        coeffs.push_back(std::move(arr));
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

}  // namespace qtheta
