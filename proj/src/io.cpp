#include "radic/io.hpp"

#include "radic/errors.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iterator>
#include <algorithm>
#include <vector>

namespace radic {

namespace {

std::vector<std::string> split_tokens(std::string_view line)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

bool is_integer_token(const std::string& tok)
{
    std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (i == tok.size())
        return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            return false;
    return true;
}

BigInt parse_exact_token(const std::string& tok, std::size_t line)
{
    if (!is_integer_token(tok))
        throw ParseError("line " + std::to_string(line) + ": '" + tok +
                             "' is not an integer (exact mode)",
                         line);
    // mpz_set_str rejects a leading '+'
    return BigInt(tok[0] == '+' ? tok.substr(1) : tok, 10);
}

double parse_float_token(const std::string& tok, std::size_t line)
{
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(v))
        throw ParseError("line " + std::to_string(line) + ": '" + tok + "' is not a finite number",
                         line);
    return v;
}

template <typename T, typename Convert>
Matrix<T> parse_rows(std::string_view text, Convert convert)
{
    std::vector<T> data;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto first = line.find_first_not_of(" \t\r\f\v");
        if (first == std::string_view::npos || line[first] == '#')
            continue;
        const auto tokens = split_tokens(line);
        if (tokens.empty())
            continue;
        if (rows == 0) {
            cols = tokens.size();
        } else if (tokens.size() != cols) {
            throw ParseError("line " + std::to_string(line_no) + ": row has " +
                                 std::to_string(tokens.size()) + " entries, expected " +
                                 std::to_string(cols),
                             line_no);
        }
        for (const auto& tok : tokens)
            data.push_back(convert(tok, line_no));
        ++rows;
    }
    if (rows == 0)
        throw ParseError("no matrix rows in input", 0);
    return Matrix<T>(rows, cols, std::move(data));
}

} // namespace

ExactMatrix parse_exact_matrix(std::string_view text)
{
    return parse_rows<BigInt>(text, parse_exact_token);
}

FloatMatrix parse_float_matrix(std::string_view text)
{
    return parse_rows<double>(text, parse_float_token);
}

std::string read_stream(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string format_value(const BigInt& v) { return to_decimal(v); }

std::string format_value(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_combination(std::span<const int> indices)
{
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i)
            out.push_back(' ');
        out += std::to_string(indices[i]);
    }
    return out;
}

} // namespace radic
