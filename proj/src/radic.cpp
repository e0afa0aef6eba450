#include "radic/radic.hpp"

#include "radic/errors.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace radic {

TermSign term_sign(std::span<const int> columns) noexcept
{
    const long long m = static_cast<long long>(columns.size());
    long long parity = m * (m + 1) / 2;
    for (int j : columns)
        parity += j;
    return {parity % 2 == 0 ? 1 : -1};
}

TermSign term_sign(const Combination& c, int m)
{
    if (c.size() != m)
        throw UsageError("sign requested for m=" + std::to_string(m) + " on a combination of size " +
                         std::to_string(c.size()));
    return term_sign(c.indices());
}

void TermCap::check(const BigInt& terms) const
{
    if (!force && terms > max_terms)
        throw CapacityError("C(n,m) = " + to_decimal(terms) + " terms exceeds the cap of " +
                            to_decimal(max_terms) + "; pass --force to run anyway");
}

namespace detail {

namespace {

// Reusable per-range scratch state for exact minors.
class ExactMinor {
public:
    explicit ExactMinor(const ExactMatrix& a) : a_(a), m_(a.rows())
    {
        narrow_.reserve(a.data().size());
        for (const BigInt& v : a.data()) {
            auto x = to_i64(v);
            if (!x) {
                narrow_.clear();
                break;
            }
            narrow_.push_back(*x);
        }
        fits_ = narrow_.size() == a.data().size();
        small_.resize(m_ * m_);
        big_.resize(m_ * m_);
    }

    // Adds sign * det(columns) to acc.
    void accumulate(std::span<const int> columns, int sign, BigInt& acc)
    {
        const std::size_t n = a_.cols();
        if (fits_) {
            for (std::size_t r = 0; r < m_; ++r)
                for (std::size_t t = 0; t < m_; ++t)
                    small_[r * m_ + t] = narrow_[r * n + static_cast<std::size_t>(columns[t] - 1)];
            if (auto d = kernel::bareiss_i64(small_, m_)) {
                const long v = static_cast<long>(*d);
                if (sign > 0)
                    acc += v;
                else
                    acc -= v;
                return;
            }
        }
        for (std::size_t r = 0; r < m_; ++r)
            for (std::size_t t = 0; t < m_; ++t)
                big_[r * m_ + t] = a_(r, static_cast<std::size_t>(columns[t] - 1));
        const BigInt d = kernel::bareiss(big_, m_);
        if (sign > 0)
            acc += d;
        else
            acc -= d;
    }

private:
    const ExactMatrix& a_;
    std::size_t m_;
    std::vector<std::int64_t> narrow_;
    bool fits_ = false;
    std::vector<std::int64_t> small_;
    std::vector<BigInt> big_;
};

} // namespace

BigInt accumulate_terms(const ExactMatrix& a, const BigInt& start, const BigInt& count,
                        const BinomialTable& table)
{
    ExactMinor minor(a);
    BigInt acc;
    for (Enumerator e(start, count, static_cast<int>(a.cols()), static_cast<int>(a.rows()), table);
         !e.done(); e.next())
        minor.accumulate(e.current(), term_sign(e.current()).value, acc);
    return acc;
}

double accumulate_terms(const FloatMatrix& a, const BigInt& start, const BigInt& count,
                        const BinomialTable& table)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<double> scratch(m * m);
    double acc = 0.0;
    for (Enumerator e(start, count, static_cast<int>(n), static_cast<int>(m), table); !e.done();
         e.next()) {
        const auto columns = e.current();
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t t = 0; t < m; ++t)
                scratch[r * m + t] = a(r, static_cast<std::size_t>(columns[t] - 1));
        const double d = kernel::pivoted_elimination(scratch, m);
        acc += term_sign(columns).value > 0 ? d : -d;
    }
    return acc;
}

} // namespace detail

namespace {

template <typename T>
RadicResult<T> sequential(const Matrix<T>& a, const TermCap& cap, ScalarKind mode)
{
    RadicResult<T> out;
    out.mode = mode;
    const auto m = static_cast<unsigned long>(a.rows());
    const auto n = static_cast<unsigned long>(a.cols());
    out.term_count = binomial(n, m);
    if (m > n) {
        out.value = T(0);
        return out;
    }
    if (m == 0) {
        out.value = T(1);
        return out;
    }
    cap.check(out.term_count);
    const BinomialTable table(static_cast<int>(m), static_cast<int>(n));
    out.value = detail::accumulate_terms(a, BigInt(0), table.total(), table);
    return out;
}

} // namespace

RadicResult<BigInt> radic_det_sequential(const ExactMatrix& a, const TermCap& cap)
{
    return sequential(a, cap, ScalarKind::exact);
}

RadicResult<double> radic_det_sequential(const FloatMatrix& a, const TermCap& cap)
{
    return sequential(a, cap, ScalarKind::floating);
}

} // namespace radic
