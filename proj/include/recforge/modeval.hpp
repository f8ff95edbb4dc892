#pragma once

#include "recforge/modmath.hpp"
#include "recforge/testspec.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace recforge {

// Monic companion polynomial chi(y) = y^k * q(1/y), the degree-k reversal
// of the denominator. Its roots are exactly the reciprocal roots of q, so
// reducing y^n modulo chi evaluates the trace sequence.
struct CharPoly {
    std::size_t k = 0;
    std::vector<BigInt> coeffs;  // ascending, size k+1, coeffs[k] == 1
};

inline CharPoly charpoly_of(const TestSpec& spec) {
    CharPoly chi;
    chi.k = spec.k;
    chi.coeffs.assign(spec.k + 1, BigInt(0));
    chi.coeffs[spec.k] = 1;
    for (std::size_t i = 1; i <= spec.k; ++i)
        chi.coeffs[spec.k - i] = i % 2 == 1 ? BigInt(-spec.e[i - 1]) : spec.e[i - 1];
    return chi;
}

// Coefficient vector of a residue polynomial of degree < k, entries in [0, m).
using ResiduePoly = std::vector<std::uint64_t>;

enum class PowChain { LeftToRight, RightToLeft };

// Largest supported modulus (exclusive): products of two residues must fit
// in 128-bit intermediates with headroom for addmod/submod.
inline constexpr std::uint64_t kModulusLimit = 1ull << 63;

// Immutable per-(spec, m) evaluation context. All spec constants are reduced
// into canonical residues once at construction; evaluation of different n on
// the same context is safe from concurrent threads.
class ModContext {
public:
    ModContext(const TestSpec& spec, std::uint64_t m) : m_(m), k_(spec.k) {
        if (m < 2) throw std::invalid_argument("modulus must be >= 2");
        if (m >= kModulusLimit) throw std::invalid_argument("modulus must be < 2^63");
        chi_.resize(k_);
        for (std::size_t i = 1; i <= k_; ++i) {
            // coefficient of y^{k-i} in chi is (-1)^i e_i
            std::uint64_t r = reduce(spec.e[i - 1]);
            chi_[k_ - i] = i % 2 == 1 ? (r == 0 ? 0 : m_ - r) : r;
        }
        initial_.resize(k_);
        for (std::size_t j = 0; j < k_; ++j) initial_[j] = reduce(spec.initial[j]);
        target_ = reduce(spec.target);
    }

    std::uint64_t modulus() const { return m_; }
    std::size_t order() const { return k_; }
    std::uint64_t target() const { return target_; }

    // y^n reduced modulo (chi, m) by square-and-multiply.
    ResiduePoly pow_y(std::uint64_t n, PowChain chain = PowChain::LeftToRight) const {
        ResiduePoly r(k_, 0);
        r[0] = 1 % m_;
        if (n == 0) return r;
        if (chain == PowChain::LeftToRight) {
            ResiduePoly buf(2 * k_ - 1, 0);
            for (int b = std::bit_width(n) - 1; b >= 0; --b) {
                square(r, buf);
                if ((n >> b) & 1) times_y(r);
            }
        } else {
            ResiduePoly base(k_, 0), buf(2 * k_ - 1, 0), tmp(k_, 0);
            base[0] = 1 % m_;
            times_y(base);  // base = y mod (chi, m)
            while (n) {
                if (n & 1) {
                    mul(r, base, buf, tmp);
                    r.swap(tmp);
                }
                n >>= 1;
                if (n) square(base, buf);
            }
        }
        return r;
    }

    // a(n) mod m: reduce y^n, then pair with the initial terms.
    std::uint64_t trace(std::uint64_t n, PowChain chain = PowChain::LeftToRight) const {
        ResiduePoly r = pow_y(n, chain);
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < k_; ++j) acc = addmod(acc, mulmod(r[j], initial_[j], m_), m_);
        return acc;
    }

private:
    std::uint64_t m_;
    std::size_t k_;
    std::vector<std::uint64_t> chi_;      // low k coefficients of chi mod m
    std::vector<std::uint64_t> initial_;  // a(0..k-1) mod m
    std::uint64_t target_ = 0;

    std::uint64_t reduce(const BigInt& v) const {
        if (fits_int64(v)) {
            std::int64_t x = v.convert_to<std::int64_t>();
            std::int64_t r = x % static_cast<std::int64_t>(m_);
            return r < 0 ? static_cast<std::uint64_t>(r + static_cast<std::int64_t>(m_))
                         : static_cast<std::uint64_t>(r);
        }
        return residue_of(v, m_);
    }

    // Fold buf (length 2k-1) back below degree k using y^k == -sum chi_j y^j.
    void reduce_buf(ResiduePoly& out, ResiduePoly& buf) const {
        for (std::size_t i = 2 * k_ - 2; i >= k_; --i) {
            std::uint64_t c = buf[i];
            if (c) {
                for (std::size_t j = 0; j < k_; ++j)
                    buf[i - k_ + j] = submod(buf[i - k_ + j], mulmod(c, chi_[j], m_), m_);
            }
        }
        for (std::size_t j = 0; j < k_; ++j) out[j] = buf[j];
    }

    void square(ResiduePoly& r, ResiduePoly& buf) const {
        if (k_ == 1) {
            r[0] = mulmod(r[0], r[0], m_);
            return;
        }
        std::fill(buf.begin(), buf.end(), 0);
        for (std::size_t i = 0; i < k_; ++i) {
            if (!r[i]) continue;
            for (std::size_t j = 0; j < k_; ++j)
                if (r[j]) buf[i + j] = addmod(buf[i + j], mulmod(r[i], r[j], m_), m_);
        }
        reduce_buf(r, buf);
    }

    void mul(const ResiduePoly& a, const ResiduePoly& b, ResiduePoly& buf, ResiduePoly& out) const {
        if (k_ == 1) {
            out[0] = mulmod(a[0], b[0], m_);
            return;
        }
        std::fill(buf.begin(), buf.end(), 0);
        for (std::size_t i = 0; i < k_; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < k_; ++j)
                if (b[j]) buf[i + j] = addmod(buf[i + j], mulmod(a[i], b[j], m_), m_);
        }
        reduce_buf(out, buf);
    }

    // r *= y, reduced: shift up one degree and fold the overflow term.
    void times_y(ResiduePoly& r) const {
        std::uint64_t top = r[k_ - 1];
        for (std::size_t i = k_ - 1; i >= 1; --i) r[i] = r[i - 1];
        r[0] = 0;
        if (top) {
            for (std::size_t j = 0; j < k_; ++j)
                r[j] = submod(r[j], mulmod(top, chi_[j], m_), m_);
        }
    }
};

// a(n) mod m via binary powering in Z[y]/(chi, m): O(k^2 log n) modular
// multiplications per call.
inline std::uint64_t trace_term_mod(const TestSpec& spec, std::uint64_t n, std::uint64_t m) {
    return ModContext(spec, m).trace(n);
}

// The congruence check: a(n) == e_1 (mod n), with negative e_1 normalized
// into [0, n). True for every prime n; composites where it is true are the
// test's pseudoprimes.
inline bool passes_test(const TestSpec& spec, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("passes_test: n must be >= 2");
    ModContext ctx(spec, n);
    return ctx.trace(n) == ctx.target();
}

}  // namespace recforge
