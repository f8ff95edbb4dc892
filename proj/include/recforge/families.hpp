#pragma once

#include "recforge/builtins.hpp"
#include "recforge/modeval.hpp"
#include "recforge/primes.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace recforge {

// An explicit infinite pseudoprime family: members c * b^(a + d*i) for
// i >= i0, optionally crossed with a second base (members gain a factor
// b2^j for every j >= 0, as in {2^i * 3^j}).
struct FamilySpec {
    std::uint64_t c = 1;
    std::uint64_t b = 2;
    std::uint64_t a = 0;
    std::uint64_t d = 1;
    std::uint64_t i0 = 0;
    std::optional<std::uint64_t> b2;

    std::string describe() const {
        std::string exp = a ? std::to_string(a) + "+" : "";
        exp += d == 1 ? "i" : std::to_string(d) + "i";
        std::string s = "{";
        if (c != 1) s += std::to_string(c) + "*";
        s += std::to_string(b) + "^(" + exp + ")";
        if (b2) s += "*" + std::to_string(*b2) + "^j";
        s += " | i>=" + std::to_string(i0);
        if (b2) s += ", j>=0";
        return s + "}";
    }
};

namespace detail {

// c * b^e, or nullopt if the product leaves [0, cap].
inline std::optional<std::uint64_t> checked_member(std::uint64_t c, std::uint64_t b,
                                                   std::uint64_t e, std::uint64_t cap) {
    std::uint64_t v = c;
    if (v > cap) return std::nullopt;
    for (std::uint64_t t = 0; t < e; ++t) {
        if (v > cap / b) return std::nullopt;
        v *= b;
    }
    return v;
}

}  // namespace detail

// Members of the family up to cap, ascending, deduplicated. Values that
// would exceed cap (and in particular 2^63-1) are excluded before any
// arithmetic can wrap; *truncated reports whether the family continues
// beyond the returned list.
inline std::vector<std::uint64_t> members(const FamilySpec& f, std::uint64_t cap,
                                          bool* truncated = nullptr) {
    if (cap < 2) throw std::invalid_argument("members: cap must be >= 2");
    if (f.c < 1 || f.b < 2 || f.d < 1) throw std::invalid_argument("members: need c >= 1, b >= 2, d >= 1");
    if (f.b2 && *f.b2 < 2) throw std::invalid_argument("members: second base must be >= 2");
    if (truncated) *truncated = false;
    std::vector<std::uint64_t> out;

    if (!f.b2) {
        for (std::uint64_t i = f.i0;; ++i) {
            auto v = detail::checked_member(f.c, f.b, f.a + f.d * i, cap);
            if (!v) {
                if (truncated) *truncated = true;
                break;
            }
            out.push_back(*v);
        }
    } else {
        // Bi-indexed: walk a min-heap over (value, i, j), pushing (i, j+1)
        // after popping (i, j); rows are seeded at j = 0.
        struct Node {
            std::uint64_t v, i, j;
            bool operator>(const Node& o) const { return v > o.v; }
        };
        std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap;
        for (std::uint64_t i = f.i0;; ++i) {
            auto v = detail::checked_member(f.c, f.b, f.a + f.d * i, cap);
            if (!v) {
                if (truncated) *truncated = true;
                break;
            }
            heap.push({*v, i, 0});
        }
        while (!heap.empty()) {
            Node n = heap.top();
            heap.pop();
            if (out.empty() || out.back() != n.v) out.push_back(n.v);
            if (n.v <= cap / *f.b2)
                heap.push({n.v * *f.b2, n.i, n.j + 1});
            else if (truncated)
                *truncated = true;
        }
    }
    // Drop anything below 2 (c = 1 with i0 = a = 0 can produce 1).
    while (!out.empty() && out.front() < 2) out.erase(out.begin());
    return out;
}

struct MemberCheck {
    std::uint64_t n = 0;
    bool composite = false;
    bool passes = false;
};

struct FamilyReport {
    std::string test_label;
    FamilySpec family;
    std::uint64_t cap = 0;
    std::vector<MemberCheck> members;
    std::vector<std::string> notes;
    bool all_pass = false;  // every member <= cap is composite and passes
};

// Certifies every member <= cap composite (deterministic Miller-Rabin) and
// checks the congruence. Vacuously true when no member fits under the cap;
// a note records the truncation either way.
inline FamilyReport verify_family(const TestSpec& spec, const FamilySpec& family, std::uint64_t cap) {
    if (cap >= kModulusLimit) throw std::invalid_argument("verify_family: cap must be < 2^63");
    FamilyReport report;
    report.test_label = spec.label;
    report.family = family;
    report.cap = cap;
    bool truncated = false;
    std::vector<std::uint64_t> ns = members(family, cap, &truncated);
    report.all_pass = true;
    for (std::uint64_t n : ns) {
        MemberCheck check;
        check.n = n;
        check.composite = !is_prime_u64(n);
        check.passes = passes_test(spec, n);
        report.all_pass = report.all_pass && check.composite && check.passes;
        report.members.push_back(check);
    }
    if (ns.empty())
        report.notes.push_back("cap-truncated: no member of " + family.describe() +
                               " fits under cap " + std::to_string(cap));
    else if (truncated)
        report.notes.push_back("cap-truncated: members beyond " + std::to_string(ns.back()) +
                               " exceed cap " + std::to_string(cap));
    return report;
}

struct CatalogEntry {
    TestSpec spec;
    std::vector<FamilySpec> families;
};

// The five built-in tests that carry explicit infinite pseudoprime
// families, with every family attached.
inline std::vector<CatalogEntry> builtin_catalog() {
    std::vector<CatalogEntry> catalog;
    catalog.push_back({companion_pell_spec(),
                       {{1, 2, 0, 1, 3, 3}}});  // {2^i * 3^j | i>=3, j>=0}
    catalog.push_back({t2_spec(),
                       {{1, 2, 0, 1, 2, std::nullopt}}});  // {2^i | i>=2}
    catalog.push_back({t3_spec(),
                       {{1, 3, 0, 1, 2, std::nullopt},     // {3^i | i>=2}
                        {2, 3, 0, 1, 1, std::nullopt},     // {2*3^i | i>=1}
                        {11, 81, 0, 1, 1, std::nullopt},   // {11*81^i | i>=1}
                        {23, 3, 0, 5, 1, std::nullopt},    // {23*3^(5i) | i>=1}
                        {29, 3, 4, 12, 0, std::nullopt},   // {29*3^(4+12i) | i>=0}
                        {31, 3, 0, 16, 1, std::nullopt}}});  // {31*3^(16i) | i>=1}
    catalog.push_back({t4_spec(),
                       {{1, 2, 0, 1, 2, std::nullopt},     // {2^i | i>=2}
                        {3, 2, 0, 4, 2, std::nullopt},     // {3*2^(4i) | i>=2}
                        {11, 2, 0, 18, 2, std::nullopt},   // {11*2^(18i) | i>=2}
                        {13, 2, 17, 20, 2, std::nullopt}}});  // {13*2^(17+20i) | i>=2}
    catalog.push_back({t5_spec(),
                       {{1, 3, 0, 1, 2, std::nullopt},    // {3^i | i>=2}
                        {5, 3, 6, 10, 0, std::nullopt},   // {5*3^(6+10i) | i>=0}
                        {5, 3, 8, 10, 0, std::nullopt},   // {5*3^(8+10i) | i>=0}
                        {7, 3, 4, 6, 0, std::nullopt}}});  // {7*3^(4+6i) | i>=0}
    return catalog;
}

struct IdentityCheck {
    bool ok = true;
    std::string failure;  // names the first violated identity

    void fail(const std::string& what) {
        if (ok) {
            ok = false;
            failure = what;
        }
    }
};

// Exact doubling/tripling identities of the companion Pell sequence, for
// all 1 <= n <= n_max:
//   a(2n) = a(n)^2 + 2(-1)^(n+1)
//   a(3n) = a(n)^3 + 3(-1)^(n+1) a(n)
// and with b = a - 2, for even n:
//   b(2n) = b(n)(b(n) + 4)
//   b(3n) = b(n)(b(n) + 3)^2
inline IdentityCheck check_pell_identities(std::size_t n_max) {
    if (n_max < 1 || 3 * n_max > kExactTermBudget)
        throw std::invalid_argument("check_pell_identities: n_max out of range");
    IdentityCheck check;
    const TestSpec spec = companion_pell_spec();
    const std::vector<BigInt> a = series_terms(spec, 3 * n_max);
    for (std::size_t n = 1; n <= n_max && check.ok; ++n) {
        const BigInt sign = n % 2 == 1 ? 1 : -1;
        if (a[2 * n] != a[n] * a[n] + 2 * sign)
            check.fail("doubling identity a(2n)=a(n)^2+2(-1)^(n+1) at n=" + std::to_string(n));
        if (a[3 * n] != a[n] * a[n] * a[n] + 3 * sign * a[n])
            check.fail("tripling identity a(3n)=a(n)^3+3(-1)^(n+1)a(n) at n=" + std::to_string(n));
        if (n % 2 == 0) {
            const BigInt bn = a[n] - 2, b2n = a[2 * n] - 2, b3n = a[3 * n] - 2;
            if (b2n != bn * (bn + 4))
                check.fail("even-n identity b(2n)=b(n)(b(n)+4) at n=" + std::to_string(n));
            if (b3n != bn * (bn + 3) * (bn + 3))
                check.fail("even-n identity b(3n)=b(n)(b(n)+3)^2 at n=" + std::to_string(n));
        }
    }
    return check;
}

// Derived-sequence identities for the order-3 test t4, for 1 <= n <= n_max:
//   b(n) := a(2n) - a(n)^2 has b(1..3) = -4, -8, -40 and satisfies
//   b(n) = 2b(n-1) + 4b(n-3) for n > 3;
//   c(n) := b(n) / 2^floor(n/2) is an exact integer with
//   c(1..6) = -4, -4, -20, -24, -56, -76 and
//   c(n) = 2c(n-2) + 4c(n-4) + 2c(n-6) for n > 6;
//   a(2n) = a(n)^2 + 2^floor(n/2) * c(n).
inline IdentityCheck check_cfinite_derived(std::size_t n_max) {
    if (n_max < 1 || 2 * n_max > kExactTermBudget)
        throw std::invalid_argument("check_cfinite_derived: n_max out of range");
    IdentityCheck check;
    const TestSpec spec = t4_spec();
    const std::vector<BigInt> a = series_terms(spec, 2 * n_max);

    std::vector<BigInt> b(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) b[n] = a[2 * n] - a[n] * a[n];
    const BigInt b_expect[3] = {-4, -8, -40};
    for (std::size_t n = 1; n <= std::min<std::size_t>(3, n_max); ++n)
        if (b[n] != b_expect[n - 1]) check.fail("b(" + std::to_string(n) + ") initial value");
    for (std::size_t n = 4; n <= n_max && check.ok; ++n)
        if (b[n] != 2 * b[n - 1] + 4 * b[n - 3])
            check.fail("recurrence b(n)=2b(n-1)+4b(n-3) at n=" + std::to_string(n));

    std::vector<BigInt> c(n_max + 1);
    for (std::size_t n = 1; n <= n_max && check.ok; ++n) {
        const BigInt pow2 = BigInt(1) << (n / 2);
        if (b[n] % pow2 != 0) {
            check.fail("integrality of c(n)=b(n)/2^floor(n/2) at n=" + std::to_string(n));
            break;
        }
        c[n] = b[n] / pow2;
        if (a[2 * n] != a[n] * a[n] + pow2 * c[n])
            check.fail("identity a(2n)=a(n)^2+2^floor(n/2)c(n) at n=" + std::to_string(n));
    }
    const BigInt c_expect[6] = {-4, -4, -20, -24, -56, -76};
    for (std::size_t n = 1; n <= std::min<std::size_t>(6, n_max) && check.ok; ++n)
        if (c[n] != c_expect[n - 1]) check.fail("c(" + std::to_string(n) + ") initial value");
    for (std::size_t n = 7; n <= n_max && check.ok; ++n)
        if (c[n] != 2 * c[n - 2] + 4 * c[n - 4] + 2 * c[n - 6])
            check.fail("recurrence c(n)=2c(n-2)+4c(n-4)+2c(n-6) at n=" + std::to_string(n));
    return check;
}

}  // namespace recforge
