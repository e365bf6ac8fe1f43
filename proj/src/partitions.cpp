#include "qtheta/partitions.hpp"

#include <algorithm>

namespace qtheta {

namespace {

void emit(long remaining, long cap, std::vector<long>& current,
          std::vector<std::vector<long>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (long piece = std::min(remaining, cap); piece >= 1; --piece) {
        current.push_back(piece);
        emit(remaining - piece, piece, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<long>> enumerate_partitions(long n) {
    if (n < 0 || n > kMaxPartitionN)
        raise(ErrorCode::OutOfRange,
              "partition enumeration supports 0 <= n <= " + std::to_string(kMaxPartitionN));
    std::vector<std::vector<long>> out;
    std::vector<long> current;
    emit(n, n == 0 ? 1 : n, current, out);
    return out;
}

long partition_count(long n) {
    if (n < 0) raise(ErrorCode::OutOfRange, "partition_count expects n >= 0");
    // p(k) as the coefficient series of prod 1/(1-q^piece), built in place
    std::vector<long> table(static_cast<size_t>(n + 1), 0);
    table[0] = 1;
    for (long piece = 1; piece <= n; ++piece)
        for (long k = piece; k <= n; ++k)
            table[static_cast<size_t>(k)] += table[static_cast<size_t>(k - piece)];
    return table[static_cast<size_t>(n)];
}

long dyson_rank(const std::vector<long>& partition) {
    if (partition.empty()) return 0;
    return partition.front() - static_cast<long>(partition.size());
}

std::map<long, long> rank_counts(long n) {
    std::map<long, long> counts;
    for (const auto& part : enumerate_partitions(n)) ++counts[dyson_rank(part)];
    return counts;
}

void XPoly::add(long exponent, std::int64_t delta) {
    auto it = coeffs_.find(exponent);
    if (it == coeffs_.end()) {
        if (delta != 0) coeffs_.emplace(exponent, delta);
        return;
    }
    it->second += delta;
    if (it->second == 0) coeffs_.erase(it);
}

void XPoly::add_shifted(const XPoly& other, long exponent_shift) {
    for (const auto& [e, c] : other.coeffs_) add(e + exponent_shift, c);
}

std::int64_t XPoly::coeff(long exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

long XPoly::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
long XPoly::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

Cyc XPoly::eval(const Cyc& x) const {
    Cyc out;
    for (const auto& [e, c] : coeffs_) out = out + Cyc(c) * x.pow(e);
    return out;
}

std::vector<XPoly> rank_gf(long n_max) {
    if (n_max < 0) raise(ErrorCode::OutOfRange, "rank_gf expects n_max >= 0");
    size_t size = static_cast<size_t>(n_max + 1);
    std::vector<XPoly> acc(size), partial(size);
    acc[0].add(0, 1);
    partial[0].add(0, 1);
    for (long n = 1; n * n <= n_max; ++n) {
        // multiply partial by 1/(1 - x q^n) and 1/(1 - x^{-1} q^n) in place
        for (long xdir : {1L, -1L})
            for (long k = n; k <= n_max; ++k)
                partial[static_cast<size_t>(k)].add_shifted(partial[static_cast<size_t>(k - n)],
                                                            xdir);
        for (long k = 0; k + n * n <= n_max; ++k)
            acc[static_cast<size_t>(k + n * n)].add_shifted(partial[static_cast<size_t>(k)], 0);
    }
    return acc;
}

std::string rank_table_tsv(long n_max) {
    if (n_max < 0 || n_max > kMaxPartitionN)
        raise(ErrorCode::OutOfRange,
              "rank table supports 0 <= n <= " + std::to_string(kMaxPartitionN));
    std::string out;
    for (long n = 0; n <= n_max; ++n)
        for (const auto& [m, count] : rank_counts(n))
            out += std::to_string(n) + "\t" + std::to_string(m) + "\t" + std::to_string(count) +
                   "\n";
    return out;
}

}  // namespace qtheta
