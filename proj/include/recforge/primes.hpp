#pragma once

#include "recforge/errors.hpp"
#include "recforge/modmath.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace recforge {

// Deterministic strong-probable-prime test for the full uint64 range.
// The fixed witness set {2,3,5,7,11,13,17,19,23,29,31,37} is correct for
// all n < 3.317e24 (Sorenson-Webster), which covers 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Constant-time primality lookup for 2..limit, built by a segmented sieve.
// One bit per odd number, so the table costs ~limit/16 bytes; construction
// touches one segment at a time plus the base primes up to sqrt(limit).
class PrimeTable {
public:
    static constexpr std::uint64_t kMaxLimit = 1ull << 32;
    static constexpr std::uint64_t kDefaultBudgetBytes = 512ull << 20;
    static constexpr std::uint64_t kSegmentOdds = 1ull << 20;

    explicit PrimeTable(std::uint64_t limit, std::uint64_t budget_bytes = kDefaultBudgetBytes)
        : limit_(limit) {
        if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
        if (limit > kMaxLimit)
            throw BudgetError("PrimeTable: limit " + std::to_string(limit) + " exceeds the cap of 2^32");
        const std::uint64_t odds = limit / 2 + 1;  // indices for 1, 3, 5, ...
        const std::uint64_t words = (odds + 63) / 64;
        if (words * 8 > budget_bytes)
            throw BudgetError("PrimeTable: limit " + std::to_string(limit) + " needs " +
                              std::to_string(words * 8) + " bytes, over the budget of " +
                              std::to_string(budget_bytes));
        bits_.assign(words, 0);
        mark_composite(0);  // 1

        // Base primes up to sqrt(limit), by a plain odd-only sieve.
        std::uint64_t root = 1;
        while ((root + 1) * (root + 1) <= limit) ++root;
        std::vector<std::uint64_t> base;
        {
            std::vector<char> small(root / 2 + 1, 1);  // small[i] ~ 2i+1
            for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= root; ++i) {
                if (!small[i]) continue;
                const std::uint64_t p = 2 * i + 1;
                for (std::uint64_t j = (p * p) / 2; j < small.size(); j += p) small[j] = 0;
            }
            for (std::uint64_t i = 1; 2 * i + 1 <= root; ++i)
                if (small[i]) base.push_back(2 * i + 1);
        }

        // Segment over odd indices [lo, hi): index i represents 2i+1.
        for (std::uint64_t seg_lo = 1; seg_lo < odds; seg_lo += kSegmentOdds) {
            const std::uint64_t seg_hi = std::min(odds, seg_lo + kSegmentOdds);
            for (std::uint64_t p : base) {
                std::uint64_t start = (p * p) / 2;  // index of p^2
                if (start < seg_lo) {
                    const std::uint64_t lo_val = 2 * seg_lo + 1;
                    std::uint64_t first = (lo_val + p - 1) / p * p;  // first multiple >= lo_val
                    if ((first & 1) == 0) first += p;                // odd multiples only
                    start = first / 2;
                }
                for (std::uint64_t j = start; j < seg_hi; j += p) mark_composite(j);
            }
        }
    }

    std::uint64_t limit() const { return limit_; }

    bool is_prime(std::uint64_t n) const {
        if (n > limit_) throw std::out_of_range("PrimeTable: query beyond limit");
        if (n < 2) return false;
        if (n == 2) return true;
        if ((n & 1) == 0) return false;
        const std::uint64_t i = n / 2;
        return (bits_[i / 64] & (1ull << (i % 64))) == 0;
    }

    std::uint64_t count_primes() const {
        std::uint64_t c = 1;  // 2
        for (std::uint64_t n = 3; n <= limit_; n += 2)
            if (is_prime(n)) ++c;
        return c;
    }

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> bits_;  // set bit = composite odd number

    void mark_composite(std::uint64_t i) { bits_[i / 64] |= 1ull << (i % 64); }
};

}  // namespace recforge
