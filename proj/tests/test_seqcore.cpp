#include "recforge/builtins.hpp"
#include "recforge/testspec.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace recforge;

namespace {

std::vector<BigInt> bigs(std::initializer_list<long long> xs) {
    std::vector<BigInt> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("spec_from_denominator reads off order, e and target") {
    const TestSpec pell = spec_from_denominator(IntPoly{1, -2, -1}, "pell");
    CHECK(pell.k == 2);
    CHECK(pell.e == bigs({2, -1}));
    CHECK(pell.target == 2);

    const TestSpec dbz = spec_from_denominator(IntPoly{1, -1, -1, 0, -1, 0, 0, -4}, "dbz");
    CHECK(dbz.k == 7);
    CHECK(dbz.e == bigs({1, -1, 0, -1, 0, 0, 4}));
    CHECK(dbz.target == 1);

    const TestSpec single = spec_from_denominator(IntPoly{1, -5}, "x5");
    CHECK(single.k == 1);
    CHECK(single.e == bigs({5}));
    for (std::uint64_t n = 1; n <= 12; ++n) {
        BigInt expect = 1;
        for (std::uint64_t i = 0; i < n; ++i) expect *= 5;
        CHECK(exact_term(single, n) == expect);
    }
}

TEST_CASE("spec_from_denominator rejects bad input") {
    CHECK_THROWS_AS(spec_from_denominator(IntPoly{2, -2, -1}, "bad"), std::invalid_argument);
    CHECK_THROWS_AS(spec_from_denominator(IntPoly{}, "zero"), std::invalid_argument);
    CHECK_THROWS_AS(spec_from_denominator(IntPoly{1}, "const"), std::invalid_argument);
    // trailing zeros canonicalize before the degree check
    const TestSpec trimmed = spec_from_denominator(IntPoly{1, -2, -1, 0, 0}, "pell");
    CHECK(trimmed.k == 2);
}

TEST_CASE("numerator_for matches the closed displays") {
    CHECK(numerator_for(IntPoly{1, -2, -1}) == IntPoly{2, -2});
    CHECK(numerator_for(IntPoly{1, -1, -1, 0, -1, 0, 0, -4}) == IntPoly{7, -6, -5, 0, -3});
    CHECK(numerator_for(IntPoly{1, -7}) == IntPoly{1});
    CHECK(numerator_for(IntPoly{1, 0, 2, 2}) == IntPoly{3, 0, 2});
}

TEST_CASE("numerator degree stays below the order") {
    for (const TestSpec& spec : testutil::corpus()) {
        REQUIRE_FALSE(spec.p.is_zero());
        CHECK(*spec.p.degree() <= spec.k - 1);
    }
}

TEST_CASE("newton_initial_terms") {
    CHECK(newton_initial_terms(bigs({2, -1}), 3) == bigs({2, 2, 6}));
    CHECK(newton_initial_terms(bigs({1, -1, 0, -1, 0, 0, 4}), 8) ==
          bigs({7, 1, 3, 4, 11, 16, 30, 78}));
    CHECK(newton_initial_terms(bigs({0, 2, -2}), 4) == bigs({3, 0, -4, -6}));
    // count past the order continues with the plain recurrence
    CHECK(newton_initial_terms(bigs({2, -1}), 9) == bigs({2, 2, 6, 14, 34, 82, 198, 478, 1154}));
}

TEST_CASE("series_terms") {
    CHECK(series_terms(companion_pell_spec(), 8) == bigs({2, 2, 6, 14, 34, 82, 198, 478, 1154}));
    CHECK(series_terms(dbz_spec(), 7) == bigs({7, 1, 3, 4, 11, 16, 30, 78}));
    for (const TestSpec& spec : testutil::corpus())
        CHECK(series_terms(spec, 0) == std::vector<BigInt>{BigInt(spec.k)});
}

TEST_CASE("exact_term frozen values") {
    CHECK(exact_term(perrin_spec(), 17) == 119);
    CHECK(exact_term(companion_pell_spec(), 8) == 1154);
    for (const TestSpec& spec : testutil::corpus()) CHECK(exact_term(spec, 0) == spec.k);
}

TEST_CASE("exact_term refuses past the budget") {
    CHECK_THROWS_AS(exact_term(perrin_spec(), kExactTermBudget + 1), BudgetError);
    CHECK_NOTHROW(exact_term(spec_from_denominator(IntPoly{1, -1}, "ones"), kExactTermBudget));
}

TEST_CASE("series and recurrence agree on the corpus") {
    for (const TestSpec& spec : testutil::corpus()) {
        const std::vector<BigInt> s = series_terms(spec, 200);
        for (std::uint64_t n = 0; n <= 200; ++n) CHECK(s[n] == exact_term(spec, n));
    }
}

TEST_CASE("series and recurrence agree on random specs") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int trial = 0; trial < 40; ++trial) {
        const TestSpec spec = testutil::random_spec(rng);
        const std::vector<BigInt> s = series_terms(spec, 120);
        for (std::uint64_t n = 0; n <= 120; ++n) REQUIRE(s[n] == exact_term(spec, n));
    }
}

TEST_CASE("round-trip through the denominator") {
    std::mt19937_64 rng(0xBEEF);
    for (int trial = 0; trial < 40; ++trial) {
        const TestSpec spec = testutil::random_spec(rng);
        CHECK(spec_from_denominator(spec.q, spec.label).q == spec.q);
    }
}

TEST_CASE("perrin uses the classical recurrence") {
    const TestSpec spec = perrin_spec();
    CHECK(spec.q == IntPoly{1, 0, -1, -1});
    CHECK(spec.initial == bigs({3, 0, 2}));
    CHECK(spec.target == 0);
    CHECK(recurrence_to_string(spec) == "a(n) = a(n-2) + a(n-3)");
    // first terms of the classical sequence
    CHECK(series_terms(spec, 10) == bigs({3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17}));
}

TEST_CASE("recurrence rendering") {
    CHECK(recurrence_to_string(dbz_spec()) ==
          "a(n) = a(n-1) + a(n-2) + a(n-4) + 4*a(n-7)");
    CHECK(recurrence_to_string(t4_spec()) == "a(n) = -2*a(n-2) - 2*a(n-3)");
}
