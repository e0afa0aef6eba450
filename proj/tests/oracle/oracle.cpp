#include "oracle.hpp"

#include "radic/errors.hpp"

#include <string>

namespace radic::oracle {

namespace {

void descend(int next, int n, int left, std::vector<int>& prefix,
             std::vector<std::vector<int>>& out, std::size_t cap)
{
    if (left == 0) {
        if (out.size() == cap)
            throw CapacityError("oracle enumeration exceeds " + std::to_string(cap));
        out.push_back(prefix);
        return;
    }
    for (int v = next; v <= n - left + 1; ++v) {
        prefix.push_back(v);
        descend(v + 1, n, left - 1, prefix, out, cap);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> combinations_bruteforce(int n, int m, std::size_t cap)
{
    std::vector<std::vector<int>> out;
    if (m < 0 || m > n)
        return out;
    std::vector<int> prefix;
    descend(1, n, m, prefix, out, cap);
    return out;
}

BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a)
{
    const std::size_t m = a.size();
    if (m == 0)
        return 1;
    if (m == 1)
        return a[0][0];
    BigInt total = 0;
    for (std::size_t col = 0; col < m; ++col) {
        if (sgn(a[0][col]) == 0)
            continue;
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t r = 1; r < m; ++r) {
            std::vector<BigInt> row;
            for (std::size_t c = 0; c < m; ++c)
                if (c != col)
                    row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        const BigInt term = a[0][col] * cofactor_det(minor);
        if (col % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

BigInt radic_det_bruteforce(const ExactMatrix& a, std::size_t cap)
{
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    if (m > n)
        return 0;
    if (m > 9)
        throw CapacityError("oracle cofactor expansion limited to m <= 9");

    BigInt total = 0;
    for (const auto& cols : combinations_bruteforce(n, m, cap)) {
        int exponent = 0;
        for (int i = 1; i <= m; ++i)
            exponent += i;
        for (int j : cols)
            exponent += j;

        std::vector<std::vector<BigInt>> sub(static_cast<std::size_t>(m));
        for (int r = 0; r < m; ++r)
            for (int j : cols)
                sub[static_cast<std::size_t>(r)].push_back(
                    a(static_cast<std::size_t>(r), static_cast<std::size_t>(j - 1)));
        if (exponent % 2 == 0)
            total += cofactor_det(sub);
        else
            total -= cofactor_det(sub);
    }
    return total;
}

} // namespace radic::oracle
