#pragma once

#include "radic/linalg.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace radic::cli {

enum ExitCode : int {
    ok = 0,
    parse_error = 2,
    range_error = 3,
    io_error = 4,
};

/// Parses argv and runs one subcommand (compute, unrank, rank, enumerate, bench),
/// writing results to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Bench input: m x n, entries uniform in [-9, 9] from mt19937_64(seed).
ExactMatrix bench_matrix(std::size_t m, std::size_t n, std::uint64_t seed);
FloatMatrix to_float(const ExactMatrix& a);

} // namespace radic::cli
