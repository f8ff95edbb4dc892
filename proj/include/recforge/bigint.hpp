#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recforge {

using BigInt = boost::multiprecision::cpp_int;

// Canonical residue of v in [0, m). Requires m >= 1.
inline std::uint64_t residue_of(const BigInt& v, std::uint64_t m) {
    BigInt r = v % m;
    if (r < 0) r += m;
    return r.convert_to<std::uint64_t>();
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Parses an optionally signed decimal integer. Rejects anything else.
inline BigInt bigint_from_decimal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) throw std::invalid_argument("not a decimal integer: '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return BigInt(s);
}

inline bool fits_int64(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

}  // namespace recforge
