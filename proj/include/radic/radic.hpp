#pragma once

#include "radic/bigint.hpp"
#include "radic/combinatorics.hpp"
#include "radic/linalg.hpp"

#include <span>

namespace radic {

/// (-1)^(r+s) with r = 1 + ... + m and s the sum of the chosen column indices.
struct TermSign {
    int value = 1;

    friend bool operator==(TermSign, TermSign) = default;
};

TermSign term_sign(std::span<const int> columns) noexcept;
TermSign term_sign(const Combination& c, int m);

template <typename T>
struct RadicResult {
    T value{};
    BigInt term_count;    ///< C(n, m), the number of signed minors summed
    ScalarKind mode = ScalarKind::exact;
    unsigned workers = 1; ///< threads that evaluated terms, after resolving "auto"
};

/// Guard against accidental exponential blow-ups.
struct TermCap {
    BigInt max_terms{100000000};
    bool force = false;

    /// Throws CapacityError when terms > max_terms and force is unset.
    void check(const BigInt& terms) const;
};

/// Signed sum of all m x m column-selected minors, visited in dictionary order.
/// Zero when m > n, one when m = 0.
RadicResult<BigInt> radic_det_sequential(const ExactMatrix& a, const TermCap& cap = {});
RadicResult<double> radic_det_sequential(const FloatMatrix& a, const TermCap& cap = {});

namespace detail {

/// Sum of the signed minors with ranks [start, start + count). Requires 1 <= m <= n.
BigInt accumulate_terms(const ExactMatrix& a, const BigInt& start, const BigInt& count,
                        const BinomialTable& table);
double accumulate_terms(const FloatMatrix& a, const BigInt& start, const BigInt& count,
                        const BinomialTable& table);

} // namespace detail

} // namespace radic
