#pragma once

// Integer partitions, Dyson's rank (largest part minus number of parts), the
// counts N(m, n) of partitions of n with rank m, and the two-variable rank
// generating function sum_{n,m} N(m,n) x^m q^n held as exact integer data.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qtheta/cyclotomic.hpp"

namespace qtheta {

// Enumeration is capped; the generating-function routines are not.
inline constexpr long kMaxPartitionN = 40;

std::vector<std::vector<long>> enumerate_partitions(long n);
long partition_count(long n);
long dyson_rank(const std::vector<long>& partition);  // empty partition has rank 0
std::map<long, long> rank_counts(long n);             // m -> N(m, n), zero entries omitted

// Laurent polynomial in x with 64-bit integer coefficients.
class XPoly {
  public:
    XPoly() = default;

    void add(long exponent, std::int64_t delta);
    void add_shifted(const XPoly& other, long exponent_shift);
    std::int64_t coeff(long exponent) const;
    bool empty() const { return coeffs_.empty(); }
    long min_exponent() const;  // 0 when empty
    long max_exponent() const;
    Cyc eval(const Cyc& x) const;
    const std::map<long, std::int64_t>& terms() const { return coeffs_; }
    bool operator==(const XPoly& other) const { return coeffs_ == other.coeffs_; }

  private:
    std::map<long, std::int64_t> coeffs_;  // exponent -> coefficient, zeros erased
};

// Coefficients of q^0..q^{n_max} in sum_n q^{n^2} / ((xq; q)_n (q/x; q)_n),
// computed from the series (not by enumerating partitions).
std::vector<XPoly> rank_gf(long n_max);

// One line "n\tm\tN(m,n)" per nonzero count, n ascending then m ascending.
std::string rank_table_tsv(long n_max);

}  // namespace qtheta
