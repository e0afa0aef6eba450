#pragma once

#include "radic/bigint.hpp"
#include "radic/combinatorics.hpp"
#include "radic/linalg.hpp"

#include <istream>
#include <string>
#include <string_view>

namespace radic {

/// Matrix text: one row per line, entries split on whitespace or commas.
/// Blank lines and lines whose first non-blank character is '#' are skipped.
/// Exact mode accepts only integer tokens ([+-]digits). Throws ParseError
/// carrying the 1-based line at fault.
ExactMatrix parse_exact_matrix(std::string_view text);
FloatMatrix parse_float_matrix(std::string_view text);

std::string read_stream(std::istream& in);

/// Full decimal rendering, never scientific.
std::string format_value(const BigInt& v);
/// 17 significant digits, enough to round-trip a double.
std::string format_value(double v);

/// Space-separated 1-based indices, e.g. "2 5 6 7 8".
std::string format_combination(std::span<const int> indices);

} // namespace radic
