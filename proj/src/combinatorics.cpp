#include "radic/combinatorics.hpp"

#include "radic/errors.hpp"

#include <numeric>
#include <string>

namespace radic {

namespace {

void check_shape(int n, int m)
{
    if (n < 0 || m < 0 || m > n)
        throw UsageError("need 0 <= m <= n, got n=" + std::to_string(n) +
                         " m=" + std::to_string(m));
}

void check_table(const BinomialTable& table, int n, int m)
{
    if (table.m() != m || table.n() != n)
        throw UsageError("binomial table built for (m=" + std::to_string(table.m()) +
                         ", n=" + std::to_string(table.n()) + "), used with (m=" +
                         std::to_string(m) + ", n=" + std::to_string(n) + ")");
}

} // namespace

Combination::Combination(std::vector<int> indices, int n) : indices_(std::move(indices)), n_(n)
{
    if (n_ < 0 || size() > n_)
        throw ValidationError("combination of " + std::to_string(size()) +
                              " indices does not fit in {1.." + std::to_string(n_) + "}");
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 1 || indices_[i] > n_)
            throw ValidationError("index " + std::to_string(indices_[i]) + " outside {1.." +
                                  std::to_string(n_) + "}");
        if (i > 0 && indices_[i - 1] >= indices_[i])
            throw ValidationError("combination is not strictly increasing at position " +
                                  std::to_string(i + 1));
    }
}

Combination Combination::first(int n, int m)
{
    check_shape(n, m);
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 1);
    return {std::move(idx), n, Unchecked{}};
}

Combination Combination::last(int n, int m)
{
    check_shape(n, m);
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), n - m + 1);
    return {std::move(idx), n, Unchecked{}};
}

long long Combination::index_sum() const noexcept
{
    return std::accumulate(indices_.begin(), indices_.end(), 0LL);
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt out;
    if (k > n)
        return out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BinomialTable::BinomialTable(int m, int n) : m_(m), n_(n)
{
    if (m < 1 || m > n)
        throw UsageError("binomial table needs 1 <= m <= n, got m=" + std::to_string(m) +
                         " n=" + std::to_string(n));
    const int width = cols();
    cells_.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(width));
    auto at = [&](int j, int i) -> BigInt& {
        return cells_[static_cast<std::size_t>(j) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(i)];
    };
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < width; ++i) {
            if (j == 0 || i == 0)
                at(j, i) = 1;
            else
                at(j, i) = at(j, i - 1) + at(j - 1, i);
        }
    }
    total_ = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m));
}

Combination unrank(const BigInt& q, int n, int m, const BinomialTable& table, std::size_t* lookups)
{
    check_table(table, n, m);
    if (sgn(q) < 0 || q >= table.total())
        throw RangeError("rank " + to_decimal(q) + " outside [0, " + to_decimal(table.total()) +
                         ")");

    std::vector<int> out(static_cast<std::size_t>(m));
    std::size_t reads = 0;
    BigInt rest = q;
    int col = table.cols() - 1;
    int value = 1;
    for (int pos = 0; pos < m; ++pos) {
        const int row = m - 1 - pos;
        // Skip every candidate value whose block of completions lies wholly below `rest`.
        for (;;) {
            ++reads;
            const BigInt& block = table.cell(row, col);
            if (rest < block)
                break;
            rest -= block;
            --col;
            ++value;
        }
        out[static_cast<std::size_t>(pos)] = value++;
    }
    if (lookups)
        *lookups += reads;
    return {std::move(out), n, Combination::Unchecked{}};
}

Combination unrank(const BigInt& q, int n, int m)
{
    check_shape(n, m);
    if (m == 0) {
        if (sgn(q) != 0)
            throw RangeError("rank " + to_decimal(q) + " outside [0, 1)");
        return Combination::first(n, 0);
    }
    return unrank(q, n, m, BinomialTable(m, n));
}

BigInt rank(const Combination& c, const BinomialTable& table)
{
    const int m = c.size();
    check_table(table, c.ambient(), m);

    BigInt q;
    int col = table.cols() - 1;
    int value = 1;
    for (int pos = 0; pos < m; ++pos) {
        const int row = m - 1 - pos;
        for (; value < c[static_cast<std::size_t>(pos)]; ++value, --col)
            q += table.cell(row, col);
        ++value;
    }
    return q;
}

BigInt rank(const Combination& c)
{
    if (c.size() == 0)
        return 0;
    return rank(c, BinomialTable(c.size(), c.ambient()));
}

bool step_forward(std::span<int> idx, int n) noexcept
{
    const int m = static_cast<int>(idx.size());
    int p = m - 1;
    // Position p is saturated when it already holds its largest admissible value n - m + 1 + p.
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - m + 1 + p)
        --p;
    if (p < 0)
        return false;
    int v = ++idx[static_cast<std::size_t>(p)];
    for (std::size_t t = static_cast<std::size_t>(p) + 1; t < idx.size(); ++t)
        idx[t] = ++v;
    return true;
}

std::optional<Combination> successor(const Combination& c)
{
    std::vector<int> idx(c.indices().begin(), c.indices().end());
    if (!step_forward(idx, c.ambient()))
        return std::nullopt;
    return Combination(std::move(idx), c.ambient(), Combination::Unchecked{});
}

Enumerator::Enumerator(const BigInt& start, const BigInt& count, int n, int m,
                       const BinomialTable& table)
{
    check_table(table, n, m);
    init(start, count, n, m, &table);
}

Enumerator::Enumerator(const BigInt& start, const BigInt& count, int n, int m)
{
    check_shape(n, m);
    if (m == 0) {
        init(start, count, n, m, nullptr);
        return;
    }
    const BinomialTable table(m, n);
    init(start, count, n, m, &table);
}

void Enumerator::init(const BigInt& start, const BigInt& count, int n, int m,
                      const BinomialTable* table)
{
    n_ = n;
    const BigInt total =
        table ? table->total() : binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    if (sgn(start) < 0 || sgn(count) < 0 || start + count > total)
        throw RangeError("range [" + to_decimal(start) + ", " + to_decimal(start + count) +
                         ") exceeds [0, " + to_decimal(total) + ")");
    remaining_ = count;
    if (sgn(count) == 0)
        return;
    if (m == 0) {
        current_.clear();
        return;
    }
    const Combination first = unrank(start, n, m, *table);
    current_.assign(first.indices().begin(), first.indices().end());
}

void Enumerator::next()
{
    if (done())
        throw RangeError("enumerator advanced past its range");
    --remaining_;
    if (!done())
        step_forward(current_, n_);
}

std::vector<Combination> enumerate_range(const BigInt& start, const BigInt& count, int n, int m)
{
    std::vector<Combination> out;
    for (Enumerator e(start, count, n, m); !e.done(); e.next())
        out.emplace_back(std::vector<int>(e.current().begin(), e.current().end()), n);
    return out;
}

} // namespace radic
