#include "radic/linalg.hpp"

#include <cmath>
#include <utility>

namespace radic {

namespace kernel {

namespace {
__extension__ using Wide = __int128;
} // namespace

std::optional<std::int64_t> bareiss_i64(std::span<std::int64_t> a, std::size_t m) noexcept
{
    if (m == 0)
        return 1;
    auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * m + c]; };
    bool negate = false;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < m && at(p, k) == 0)
                ++p;
            if (p == m)
                return 0;
            for (std::size_t c = k; c < m; ++c)
                std::swap(at(k, c), at(p, c));
            negate = !negate;
        }
        const Wide pivot = at(k, k);
        for (std::size_t r = k + 1; r < m; ++r) {
            const Wide lead = at(r, k);
            for (std::size_t c = k + 1; c < m; ++c) {
                // Exact by Sylvester's identity. Entries stay within +-INT64_MAX, so the
                // difference of two products cannot overflow 128 bits.
                const Wide v = (pivot * at(r, c) - lead * at(k, c)) / prev;
                if (v > INT64_MAX || v < -INT64_MAX)
                    return std::nullopt;
                at(r, c) = static_cast<std::int64_t>(v);
            }
        }
        prev = at(k, k);
    }
    const std::int64_t d = at(m - 1, m - 1);
    return negate ? -d : d;
}

BigInt bareiss(std::span<BigInt> a, std::size_t m)
{
    if (m == 0)
        return 1;
    auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * m + c]; };
    bool negate = false;
    BigInt prev = 1;
    BigInt tmp;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (sgn(at(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < m && sgn(at(p, k)) == 0)
                ++p;
            if (p == m)
                return 0;
            for (std::size_t c = k; c < m; ++c)
                swap(at(k, c), at(p, c));
            negate = !negate;
        }
        for (std::size_t r = k + 1; r < m; ++r) {
            for (std::size_t c = k + 1; c < m; ++c) {
                mpz_mul(tmp.get_mpz_t(), at(k, k).get_mpz_t(), at(r, c).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), at(r, k).get_mpz_t(), at(k, c).get_mpz_t());
                mpz_divexact(at(r, c).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    BigInt d = at(m - 1, m - 1);
    return negate ? BigInt(-d) : d;
}

double pivoted_elimination(std::span<double> a, std::size_t m) noexcept
{
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * m + c]; };
    double det = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t best = k;
        for (std::size_t r = k + 1; r < m; ++r)
            if (std::fabs(at(r, k)) > std::fabs(at(best, k)))
                best = r;
        if (at(best, k) == 0.0)
            return 0.0 * det;
        if (best != k) {
            for (std::size_t c = k; c < m; ++c)
                std::swap(at(k, c), at(best, c));
            det = -det;
        }
        const double pivot = at(k, k);
        det *= pivot;
        for (std::size_t r = k + 1; r < m; ++r) {
            const double f = at(r, k) / pivot;
            for (std::size_t c = k + 1; c < m; ++c)
                at(r, c) -= f * at(k, c);
        }
    }
    return det;
}

} // namespace kernel

BigInt det_square_exact(const ExactMatrix& a)
{
    if (!a.square())
        throw UsageError("determinant of a " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " matrix");
    const std::size_t m = a.rows();

    std::vector<std::int64_t> narrow;
    narrow.reserve(m * m);
    for (const BigInt& v : a.data()) {
        auto x = to_i64(v);
        if (!x)
            break;
        narrow.push_back(*x);
    }
    if (narrow.size() == m * m) {
        if (auto d = kernel::bareiss_i64(narrow, m))
            return from_i64(*d);
    }

    std::vector<BigInt> work(a.data().begin(), a.data().end());
    return kernel::bareiss(work, m);
}

double det_square_float(const FloatMatrix& a)
{
    if (!a.square())
        throw UsageError("determinant of a " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " matrix");
    std::vector<double> work(a.data().begin(), a.data().end());
    return kernel::pivoted_elimination(work, a.rows());
}

} // namespace radic
