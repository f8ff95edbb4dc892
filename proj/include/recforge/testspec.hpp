#pragma once

#include "recforge/errors.hpp"
#include "recforge/intpoly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace recforge {

// A Perrin-style primality test derived from a denominator polynomial
// q(x) = 1 - e_1 x + e_2 x^2 - ... + (-1)^k e_k x^k. The trace sequence
// a(n) is the sum of n-th powers of the reciprocal roots of q; for every
// prime p it satisfies a(p) == e_1 (mod p). Composites that satisfy the
// congruence are the test's pseudoprimes.
//
// The roots themselves are never computed; everything is driven by the
// integer data below.
struct TestSpec {
    std::string label;
    std::size_t k = 0;            // order = deg q
    std::vector<BigInt> e;        // e[i-1] = e_i (elementary symmetric functions)
    IntPoly q;                    // denominator, constant term 1, degree k
    IntPoly p;                    // numerator of the generating function of a(n)
    std::vector<BigInt> initial;  // a(0) .. a(k-1), exact
    BigInt target;                // e_1: the residue a prime must produce
};

// Largest n accepted by exact_term. Terms grow exponentially; past this the
// caller should switch to modular evaluation.
inline constexpr std::uint64_t kExactTermBudget = 100000;

// Numerator of sum_{n>=0} a(n) x^n = p(x)/q(x), namely
// p(x) = k*q(x) - x*q'(x). The degree-k terms cancel, so deg p <= k-1.
inline IntPoly numerator_for(const IntPoly& q) {
    if (q.is_zero() || q.coeff(0) != 1)
        throw std::invalid_argument("numerator_for: constant term must be 1");
    auto deg = q.degree();
    if (*deg < 1) throw std::invalid_argument("numerator_for: degree must be >= 1");
    return BigInt(*deg) * q - q.derivative().shifted_up(1);
}

// a(0) .. a(count-1) from the e_i via Newton's identities:
//   a(0) = k,
//   a(n) = sum_{i=1..n-1} (-1)^{i+1} e_i a(n-i) + (-1)^{n-1} n e_n   (1 <= n <= k)
// and the plain order-k recurrence for n > k.
inline std::vector<BigInt> newton_initial_terms(const std::vector<BigInt>& e, std::size_t count) {
    if (count < 1) throw std::invalid_argument("newton_initial_terms: count must be >= 1");
    const std::size_t k = e.size();
    std::vector<BigInt> a;
    a.reserve(count);
    a.emplace_back(k);
    for (std::size_t n = 1; n < count; ++n) {
        BigInt s = 0;
        const std::size_t upto = n <= k ? n - 1 : k;
        for (std::size_t i = 1; i <= upto; ++i) {
            if (i % 2 == 1)
                s += e[i - 1] * a[n - i];
            else
                s -= e[i - 1] * a[n - i];
        }
        if (n <= k) s += (n % 2 == 1 ? BigInt(n) : BigInt(-static_cast<long long>(n))) * e[n - 1];
        a.push_back(std::move(s));
    }
    return a;
}

// Builds the full test from a denominator with constant term 1. The e_i
// are read off by sign-alternating the coefficients of q.
inline TestSpec spec_from_denominator(const IntPoly& q, std::string label) {
    if (q.is_zero()) throw std::invalid_argument("spec_from_denominator: zero polynomial");
    if (q.coeff(0) != 1)
        throw std::invalid_argument("spec_from_denominator: constant term must be 1, got " +
                                    q.coeff(0).str());
    const std::size_t k = *q.degree();
    if (k < 1) throw std::invalid_argument("spec_from_denominator: degree must be >= 1");

    TestSpec spec;
    spec.label = std::move(label);
    spec.k = k;
    spec.q = q;
    spec.e.reserve(k);
    for (std::size_t i = 1; i <= k; ++i)
        spec.e.push_back(i % 2 == 1 ? BigInt(-q.coeff(i)) : q.coeff(i));
    spec.p = numerator_for(q);
    spec.initial = newton_initial_terms(spec.e, k);
    spec.target = spec.e[0];
    return spec;
}

// a(0) .. a(last) by formal power-series division of p by q. Independent of
// the Newton-derived initial terms, which makes it a useful cross-check.
inline std::vector<BigInt> series_terms(const TestSpec& spec, std::size_t last) {
    std::vector<BigInt> a;
    a.reserve(last + 1);
    for (std::size_t n = 0; n <= last; ++n) {
        BigInt v = spec.p.coeff(n);
        for (std::size_t i = 1; i <= std::min(n, spec.k); ++i) v -= spec.q.coeff(i) * a[n - i];
        a.push_back(std::move(v));
    }
    return a;
}

// Exact a(n) by running the recurrence. Guarded: terms grow exponentially,
// so n beyond the budget is refused rather than silently truncated.
inline BigInt exact_term(const TestSpec& spec, std::uint64_t n) {
    if (n > kExactTermBudget)
        throw BudgetError("exact_term: n = " + std::to_string(n) + " exceeds the exact budget of " +
                          std::to_string(kExactTermBudget));
    if (n < spec.k) return spec.initial[static_cast<std::size_t>(n)];
    std::vector<BigInt> window = spec.initial;  // window[j] = a(m - k + j)
    BigInt next;
    for (std::uint64_t m = spec.k; m <= n; ++m) {
        next = 0;
        for (std::size_t i = 1; i <= spec.k; ++i) next -= spec.q.coeff(i) * window[spec.k - i];
        window.erase(window.begin());
        window.push_back(next);
    }
    return window.back();
}

// "a(n) = a(n-1) + 2a(n-2)" style rendering of the recurrence read off q.
inline std::string recurrence_to_string(const TestSpec& spec) {
    std::string out = "a(n) =";
    bool first = true;
    for (std::size_t i = 1; i <= spec.k; ++i) {
        BigInt r = -spec.q.coeff(i);  // a(n) = sum r_i a(n-i)
        if (r == 0) continue;
        BigInt mag = r < 0 ? BigInt(-r) : r;
        if (first) {
            out += r < 0 ? " -" : " ";
            first = false;
        } else {
            out += r < 0 ? " - " : " + ";
        }
        if (mag != 1) out += mag.str() + "*";
        out += "a(n-" + std::to_string(i) + ")";
    }
    if (first) out += " 0";
    return out;
}

}  // namespace recforge
