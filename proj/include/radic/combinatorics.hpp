#pragma once

#include "radic/bigint.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace radic {

class BinomialTable;

/// Strictly increasing choice of m indices out of {1..n}, 1-based.
class Combination {
public:
    /// Throws ValidationError unless 1 <= idx[0] < ... < idx[m-1] <= n.
    Combination(std::vector<int> indices, int n);
    Combination(std::initializer_list<int> indices, int n)
        : Combination(std::vector<int>(indices), n) {}

    /// [1, 2, ..., m]
    static Combination first(int n, int m);
    /// [n-m+1, ..., n]
    static Combination last(int n, int m);

    int ambient() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(indices_.size()); }
    int operator[](std::size_t i) const { return indices_[i]; }
    std::span<const int> indices() const noexcept { return indices_; }

    /// Sum of the 1-based indices.
    long long index_sum() const noexcept;

    /// Dictionary order over the index sequence.
    friend auto operator<=>(const Combination& a, const Combination& b)
    {
        return a.indices_ <=> b.indices_;
    }
    friend bool operator==(const Combination&, const Combination&) = default;

private:
    struct Unchecked {};
    Combination(std::vector<int> indices, int n, Unchecked)
        : indices_(std::move(indices)), n_(n) {}

    friend std::optional<Combination> successor(const Combination&);
    friend Combination unrank(const BigInt&, int, int, const BinomialTable&, std::size_t*);

    std::vector<int> indices_;
    int n_;
};

/// C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// Pascal table with m rows and n-m+1 columns, cell(j, i) = C(i + j, j).
///
/// Row j walked right-to-left lists C(n-1-x, j) for consecutive x, which is
/// exactly the number of combinations that share a prefix and place a
/// given value at the position with j places after it. The last column holds
/// the place weights C(n-1, m-1), C(n-2, m-2), ..., C(n-m, 0).
class BinomialTable {
public:
    /// Throws UsageError unless 1 <= m <= n.
    BinomialTable(int m, int n);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int rows() const noexcept { return m_; }
    int cols() const noexcept { return n_ - m_ + 1; }

    const BigInt& cell(int j, int i) const
    {
        return cells_[static_cast<std::size_t>(j) * static_cast<std::size_t>(cols()) +
                      static_cast<std::size_t>(i)];
    }

    /// Weight of 0-based place `pos`: C(n-1-pos, m-1-pos).
    const BigInt& place_weight(int pos) const { return cell(m_ - 1 - pos, cols() - 1); }

    /// C(n, m), the number of combinations the table indexes.
    const BigInt& total() const noexcept { return total_; }

private:
    int m_;
    int n_;
    std::vector<BigInt> cells_;
    BigInt total_;
};

/// q-th combination of {1..n} choose m in dictionary order.
///
/// Walks the table leftwards along one row per place; the column pointer never
/// moves right, so at most n table cells are read. When `lookups` is non-null
/// the number of cells read is added to it.
/// Throws RangeError for q outside [0, C(n,m)) and UsageError when the table
/// was built for different (m, n).
Combination unrank(const BigInt& q, int n, int m, const BinomialTable& table,
                   std::size_t* lookups = nullptr);

/// Same, building the table internally; also accepts m = 0.
Combination unrank(const BigInt& q, int n, int m);

/// Number of combinations strictly preceding `c` in dictionary order.
BigInt rank(const Combination& c, const BinomialTable& table);
BigInt rank(const Combination& c);

/// Next combination in dictionary order, or nullopt after [n-m+1, ..., n].
std::optional<Combination> successor(const Combination& c);

/// In-place dictionary successor on raw 1-based indices. Returns false, leaving
/// the input untouched, when `idx` is already the last combination.
bool step_forward(std::span<int> idx, int n) noexcept;

/// Lazy walk over ranks [start, start + count): one unrank, then successor steps.
class Enumerator {
public:
    /// Throws RangeError when start + count > C(n, m).
    Enumerator(const BigInt& start, const BigInt& count, int n, int m,
               const BinomialTable& table);
    Enumerator(const BigInt& start, const BigInt& count, int n, int m);

    /// Current combination; valid while !done().
    std::span<const int> current() const noexcept { return current_; }
    bool done() const noexcept { return sgn(remaining_) == 0; }
    void next();

private:
    void init(const BigInt& start, const BigInt& count, int n, int m, const BinomialTable* table);

    std::vector<int> current_;
    BigInt remaining_;
    int n_ = 0;
};

/// Materialised `Enumerator` output.
std::vector<Combination> enumerate_range(const BigInt& start, const BigInt& count, int n, int m);

} // namespace radic
