#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace radic {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline std::optional<std::uint64_t> to_u64(const BigInt& v)
{
    if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
        return std::nullopt;
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

inline std::optional<std::int64_t> to_i64(const BigInt& v)
{
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 63)
        return std::nullopt;
    auto mag = to_u64(abs(v));
    auto s = static_cast<std::int64_t>(*mag);
    return sgn(v) < 0 ? -s : s;
}

inline BigInt from_u64(std::uint64_t v)
{
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

inline BigInt from_i64(std::int64_t v)
{
    if (v >= 0)
        return from_u64(static_cast<std::uint64_t>(v));
    // -(v + 1) + 1 avoids negating INT64_MIN
    BigInt out = from_u64(static_cast<std::uint64_t>(-(v + 1)));
    out += 1;
    return -out;
}

} // namespace radic
