#pragma once

// Slow reference implementations. They share no code with the library
// beyond the Matrix container and BigInt alias.

#include "radic/bigint.hpp"
#include "radic/linalg.hpp"

#include <cstddef>
#include <vector>

namespace radic::oracle {

/// All m-subsets of {1..n} in lexicographic order by recursive descent.
/// Throws CapacityError when more than `cap` subsets would be produced.
std::vector<std::vector<int>> combinations_bruteforce(int n, int m, std::size_t cap = 2'000'000);

/// Laplace expansion along the first row.
BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a);

/// Signed sum of cofactor determinants over combinations_bruteforce.
/// Throws CapacityError for m > 9 or more than `cap` combinations.
BigInt radic_det_bruteforce(const ExactMatrix& a, std::size_t cap = 100'000);

} // namespace radic::oracle
