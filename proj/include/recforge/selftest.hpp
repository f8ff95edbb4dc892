#pragma once

#include "recforge/builtins.hpp"
#include "recforge/cyclic.hpp"
#include "recforge/families.hpp"
#include "recforge/hunt.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace recforge {

// Fault hooks let an external harness prove the self-test actually detects
// violations; see the selftest CLI subcommand.
enum class FaultInjection { None, CorruptInitialTerm };

struct SelfTestResult {
    struct Line {
        std::string name;
        bool ok = false;
        std::string detail;
    };
    std::vector<Line> lines;
    bool all_ok = true;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        lines.push_back({name, ok, detail});
        all_ok = all_ok && ok;
    }
};

namespace detail {

inline TestSpec random_spec(std::mt19937_64& rng, std::size_t k_max, std::int64_t c_max) {
    std::uniform_int_distribution<std::size_t> pick_k(1, k_max);
    std::uniform_int_distribution<std::int64_t> pick_c(-c_max, c_max);
    const std::size_t k = pick_k(rng);
    std::vector<BigInt> q(k + 1);
    q[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        std::int64_t e = pick_c(rng);
        while (i == k && e == 0) e = pick_c(rng);
        q[i] = i % 2 == 1 ? BigInt(-e) : BigInt(e);
    }
    return spec_from_denominator(IntPoly(std::move(q)), "random");
}

inline std::vector<std::uint64_t> small_primes(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= bound; ++p)
        if (is_prime_u64(p)) primes.push_back(p);
    return primes;
}

}  // namespace detail

// The fast verification subset: exact identities, the prime congruence on
// built-in and random tests, modular-vs-exact agreement, the cyclic
// pipeline, the built-in families, and sieve consistency. Runs in well
// under a minute single-threaded.
inline SelfTestResult run_selftest(FaultInjection fault = FaultInjection::None) {
    SelfTestResult result;

    {
        const IdentityCheck check = check_pell_identities(300);
        result.add("pell-identities", check.ok, check.ok ? "n <= 300 exact" : check.failure);
    }
    {
        const IdentityCheck check = check_cfinite_derived(300);
        result.add("cfinite-derived", check.ok, check.ok ? "n <= 300 exact" : check.failure);
    }

    {
        // a(p) == e_1 (mod p) for every built-in test and prime p <= 2000
        const auto primes = detail::small_primes(2000);
        bool ok = true;
        std::string detail_msg;
        for (const std::string& name : named_spec_labels()) {
            if (name == "t1") continue;
            TestSpec spec = *find_named_spec(name);
            if (fault == FaultInjection::CorruptInitialTerm && name == "perrin")
                spec.initial[1] += 1;
            for (std::uint64_t p : primes) {
                if (!passes_test(spec, p)) {
                    ok = false;
                    detail_msg = "invariant violated: a(p) == e1 (mod p) fails for spec '" + name +
                                 "' at p=" + std::to_string(p);
                    break;
                }
            }
            if (!ok) break;
        }
        result.add("gurak-congruence-builtin", ok, ok ? "9 specs x primes <= 2000" : detail_msg);
    }

    {
        std::mt19937_64 rng(0x6A11AD);
        const auto primes = detail::small_primes(1000);
        bool ok = true;
        std::string detail_msg;
        for (int trial = 0; trial < 200 && ok; ++trial) {
            const TestSpec spec = detail::random_spec(rng, 6, 5);
            for (std::uint64_t p : primes) {
                if (!passes_test(spec, p)) {
                    ok = false;
                    detail_msg = "invariant violated: a(p) == e1 (mod p) fails for " +
                                 spec.q.to_string() + " at p=" + std::to_string(p);
                    break;
                }
            }
        }
        result.add("gurak-congruence-random", ok, ok ? "200 specs x primes <= 1000" : detail_msg);
    }

    {
        std::mt19937_64 rng(0x07AC1E);
        std::uniform_int_distribution<std::uint64_t> pick_n(0, 3000);
        std::uniform_int_distribution<std::uint64_t> pick_m(2, (1ull << 63) - 1);
        bool ok = true;
        std::string detail_msg;
        for (int trial = 0; trial < 500 && ok; ++trial) {
            const TestSpec spec = detail::random_spec(rng, 6, 5);
            const std::uint64_t n = pick_n(rng);
            const std::uint64_t m = pick_m(rng);
            if (trace_term_mod(spec, n, m) != residue_of(exact_term(spec, n), m)) {
                ok = false;
                detail_msg = "invariant violated: fast trace != exact term mod m for " +
                             spec.q.to_string() + " at n=" + std::to_string(n) +
                             ", m=" + std::to_string(m);
            }
        }
        result.add("oracle-equivalence", ok, ok ? "500 random (spec, n, m) triples" : detail_msg);
    }

    {
        bool ok = true;
        std::string detail_msg;
        const PatternSystem ps = make_pattern_system(2, {"000", "11"});
        const TransferMatrix t = build_transfer(ps);
        const std::uint64_t expected[10] = {0, 2, 3, 2, 5, 5, 7, 10, 12, 17};
        for (std::uint64_t n = 1; n <= 10 && ok; ++n)
            if (circular_count(t, n) != expected[n - 1]) {
                ok = false;
                detail_msg = "invariant violated: counting sequence mismatch at n=" + std::to_string(n);
            }
        for (std::uint64_t n = 2; n <= 14 && ok; ++n)
            if (circular_count(t, n) != brute_circular_count(ps, n)) {
                ok = false;
                detail_msg = "invariant violated: trace vs brute enumeration at n=" + std::to_string(n);
            }
        if (ok && charpoly_trace_newton(t) != IntPoly{-1, -1, 0, 1}) {
            ok = false;
            detail_msg = "invariant violated: characteristic polynomial of the perrin system";
        }
        if (ok && spec_from_patterns(ps, "perrin-cyclic").q != perrin_spec().q) {
            ok = false;
            detail_msg = "invariant violated: exported cyclic spec differs from perrin";
        }
        result.add("cyclic-pipeline", ok, ok ? "perrin system counts, oracle, charpoly" : detail_msg);
    }

    {
        bool ok = true;
        std::string detail_msg;
        for (const CatalogEntry& entry : builtin_catalog()) {
            const std::uint64_t cap = entry.spec.label == "t4" ? 1000000000000000ull : 1000000000000ull;
            for (const FamilySpec& family : entry.families) {
                const FamilyReport report = verify_family(entry.spec, family, cap);
                if (!report.all_pass) {
                    ok = false;
                    detail_msg = "invariant violated: family " + family.describe() + " under " +
                                 entry.spec.label;
                }
            }
        }
        result.add("catalog-families", ok, ok ? "16 families to 1e12 (t4: 1e15)" : detail_msg);
    }

    {
        const PrimeTable table(200000);
        bool ok = true;
        std::string detail_msg;
        for (std::uint64_t n = 0; n <= table.limit(); ++n)
            if (table.is_prime(n) != is_prime_u64(n)) {
                ok = false;
                detail_msg = "invariant violated: sieve and miller-rabin disagree at n=" +
                             std::to_string(n);
                break;
            }
        result.add("sieve-mr-agreement", ok, ok ? "n <= 2e5" : detail_msg);
    }

    return result;
}

}  // namespace recforge
