#pragma once

#include <cstdint>

namespace recforge {

// Fixed-width modular arithmetic. mulmod/powmod are valid for any modulus
// m >= 1 (the product is formed in 128 bits before reduction, so no
// wraparound is possible). addmod/submod require m < 2^63 so that a + b
// and a + m - b cannot overflow.

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t r = a + b;
    return r >= m ? r - m : r;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace recforge
