#pragma once

#include "radic/linalg.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace radic::testing {

// All five-element subsets of {1..8} in dictionary order, ranks 0..55.
inline const std::array<std::array<int, 5>, 56> kFiveOfEight = {{
    {1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 4, 7}, {1, 2, 3, 4, 8}, {1, 2, 3, 5, 6},
    {1, 2, 3, 5, 7}, {1, 2, 3, 5, 8}, {1, 2, 3, 6, 7}, {1, 2, 3, 6, 8}, {1, 2, 3, 7, 8},
    {1, 2, 4, 5, 6}, {1, 2, 4, 5, 7}, {1, 2, 4, 5, 8}, {1, 2, 4, 6, 7}, {1, 2, 4, 6, 8},
    {1, 2, 4, 7, 8}, {1, 2, 5, 6, 7}, {1, 2, 5, 6, 8}, {1, 2, 5, 7, 8}, {1, 2, 6, 7, 8},
    {1, 3, 4, 5, 6}, {1, 3, 4, 5, 7}, {1, 3, 4, 5, 8}, {1, 3, 4, 6, 7}, {1, 3, 4, 6, 8},
    {1, 3, 4, 7, 8}, {1, 3, 5, 6, 7}, {1, 3, 5, 6, 8}, {1, 3, 5, 7, 8}, {1, 3, 6, 7, 8},
    {1, 4, 5, 6, 7}, {1, 4, 5, 6, 8}, {1, 4, 5, 7, 8}, {1, 4, 6, 7, 8}, {1, 5, 6, 7, 8},
    {2, 3, 4, 5, 6}, {2, 3, 4, 5, 7}, {2, 3, 4, 5, 8}, {2, 3, 4, 6, 7}, {2, 3, 4, 6, 8},
    {2, 3, 4, 7, 8}, {2, 3, 5, 6, 7}, {2, 3, 5, 6, 8}, {2, 3, 5, 7, 8}, {2, 3, 6, 7, 8},
    {2, 4, 5, 6, 7}, {2, 4, 5, 6, 8}, {2, 4, 5, 7, 8}, {2, 4, 6, 7, 8}, {2, 5, 6, 7, 8},
    {3, 4, 5, 6, 7}, {3, 4, 5, 6, 8}, {3, 4, 5, 7, 8}, {3, 4, 6, 7, 8}, {3, 5, 6, 7, 8},
    {4, 5, 6, 7, 8},
}};

inline ExactMatrix random_exact(std::mt19937_64& rng, std::size_t m, std::size_t n, int lo = -9,
                                int hi = 9)
{
    std::uniform_int_distribution<int> entry(lo, hi);
    ExactMatrix a(m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = entry(rng);
    return a;
}

inline FloatMatrix as_float(const ExactMatrix& a)
{
    FloatMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c).get_d();
    return out;
}

/// Uniform shape with 1 <= m <= n <= max_n.
inline std::pair<std::size_t, std::size_t> random_shape(std::mt19937_64& rng, std::size_t max_n)
{
    std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
    const std::size_t n = pick_n(rng);
    std::uniform_int_distribution<std::size_t> pick_m(1, n);
    return {pick_m(rng), n};
}

/// |got - want| <= tol * |want|, or |got| <= tol when want == 0.
inline bool close_relative(double got, double want, double tol)
{
    if (want == 0.0)
        return std::abs(got) <= tol;
    return std::abs(got - want) <= tol * std::abs(want);
}

} // namespace radic::testing
