#include "recforge/families.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace recforge;

TEST_CASE("bi-indexed members ascend without duplicates") {
    FamilySpec t1{1, 2, 0, 1, 3, 3};  // {2^i * 3^j | i>=3, j>=0}
    CHECK(members(t1, 100) == std::vector<std::uint64_t>{8, 16, 24, 32, 48, 64, 72, 96});
    const auto big = members(t1, 1000000);
    for (std::size_t i = 1; i < big.size(); ++i) REQUIRE(big[i - 1] < big[i]);
}

TEST_CASE("single-base members") {
    FamilySpec powers_of_two{1, 2, 0, 1, 2, std::nullopt};  // {2^i | i>=2}
    CHECK(members(powers_of_two, 40) == std::vector<std::uint64_t>{4, 8, 16, 32});
    FamilySpec strided{29, 3, 4, 12, 0, std::nullopt};  // {29*3^(4+12i) | i>=0}
    CHECK(members(strided, 3000) == std::vector<std::uint64_t>{2349});
}

TEST_CASE("members preconditions") {
    CHECK_THROWS_AS(members({1, 2, 0, 1, 0, std::nullopt}, 1), std::invalid_argument);
    CHECK_THROWS_AS(members({0, 2, 0, 1, 0, std::nullopt}, 10), std::invalid_argument);
    CHECK_THROWS_AS(members({1, 1, 0, 1, 0, std::nullopt}, 10), std::invalid_argument);
}

TEST_CASE("members never overflow before the cap check") {
    FamilySpec huge{13, 2, 17, 20, 2, std::nullopt};  // {13*2^(17+20i) | i>=2}
    bool truncated = false;
    CHECK(members(huge, 1000000000000000ull, &truncated).empty());
    CHECK(truncated);
    // the first member 13*2^57 fits below 2^63; the next would overflow
    const auto near_limit = members(huge, (1ull << 63) - 1, &truncated);
    CHECK(near_limit == std::vector<std::uint64_t>{13ull << 57});
    CHECK(truncated);
}

TEST_CASE("sub-2 values are dropped") {
    FamilySpec from_one{1, 2, 0, 1, 0, std::nullopt};  // 1, 2, 4, ...
    CHECK(members(from_one, 8) == std::vector<std::uint64_t>{2, 4, 8});
}

TEST_CASE("verify_family validates composite and congruence") {
    const FamilyReport good = verify_family(companion_pell_spec(), {1, 2, 0, 1, 3, 3}, 1000000000);
    CHECK(good.all_pass);
    CHECK_FALSE(good.members.empty());

    // member 2 is prime, so the verdict fails
    const FamilyReport bad = verify_family(companion_pell_spec(), {1, 2, 0, 1, 1, std::nullopt}, 1000);
    CHECK_FALSE(bad.all_pass);
    REQUIRE(bad.members.size() >= 1);
    CHECK(bad.members[0].n == 2);
    CHECK_FALSE(bad.members[0].composite);
}

TEST_CASE("verify_family records cap truncation") {
    const FamilyReport empty = verify_family(t4_spec(), {13, 2, 17, 20, 2, std::nullopt},
                                             1000000000000000ull);
    CHECK(empty.all_pass);  // vacuous
    CHECK(empty.members.empty());
    REQUIRE_FALSE(empty.notes.empty());
    CHECK(empty.notes[0].find("cap-truncated") != std::string::npos);
}

TEST_CASE("catalog shape and spot values") {
    const auto catalog = builtin_catalog();
    REQUIRE(catalog.size() == 5);
    std::size_t families = 0;
    for (const CatalogEntry& entry : catalog) families += entry.families.size();
    CHECK(families == 16);
    CHECK(catalog[0].spec.label == "companion-pell");
    // t3: a(1) = 2, a(2) = 8
    CHECK(catalog[2].spec.initial == std::vector<BigInt>{BigInt(2), BigInt(2)});
    CHECK(exact_term(catalog[2].spec, 2) == 8);
    // t5 at n = 9: a(9) = 973 == 1 (mod 9)
    CHECK(exact_term(catalog[4].spec, 9) == 973);
    CHECK(passes_test(catalog[4].spec, 9));
}

TEST_CASE("catalog families verify at desk scale") {
    for (const CatalogEntry& entry : builtin_catalog()) {
        for (const FamilySpec& family : entry.families) {
            const FamilyReport report = verify_family(entry.spec, family, 100000000);
            CHECK(report.all_pass);
        }
    }
}

TEST_CASE("pell identity spot values") {
    const TestSpec pell = companion_pell_spec();
    const auto a = series_terms(pell, 24);
    CHECK(a[4] == 34);
    CHECK(a[4] == a[2] * a[2] - 2);            // n = 2, doubling
    CHECK(a[2] == a[1] * a[1] + 2);            // n = 1, smallest case
    CHECK(a[8] - 2 == (a[4] - 2) * (a[4] + 2));  // b(8) = 1152 = 32 * 36
    CHECK(a[24] - 2 == 24 * BigInt(64033200));   // b(24)/24 is an integer
}

TEST_CASE("check_pell_identities holds exactly") {
    const IdentityCheck check = check_pell_identities(300);
    CHECK(check.ok);
    CHECK(check.failure.empty());
    CHECK_THROWS_AS(check_pell_identities(0), std::invalid_argument);
}

TEST_CASE("check_cfinite_derived holds exactly") {
    const IdentityCheck check = check_cfinite_derived(300);
    CHECK(check.ok);

    // paper-derived spot values via the direct definition
    const auto a = series_terms(t4_spec(), 12);
    CHECK(a[6] - a[3] * a[3] == -40);                  // b(3)
    CHECK((a[12] - a[6] * a[6]) / BigInt(8) == -76);   // c(6) = b(6)/2^3
    CHECK(a[2] == a[1] * a[1] + (a[2] - a[1] * a[1]));  // identity (iii) at n=1 is -4 = 0 + c(1)
    CHECK(a[2] - a[1] * a[1] == -4);
}

TEST_CASE("even-n divisibility propagates to doubled indices") {
    // modular form of the doubling argument: if n | b(n) for even n then 2n | b(2n)
    const TestSpec pell = companion_pell_spec();
    for (std::uint64_t n = 2; n <= 10000; n += 2) {
        const ModContext at_n(pell, n);
        if (at_n.trace(n) != at_n.target()) continue;
        const ModContext doubled(pell, 2 * n);
        REQUIRE(doubled.trace(2 * n) == doubled.target());
    }
}

TEST_CASE("family descriptions") {
    CHECK(FamilySpec{1, 2, 0, 1, 3, 3}.describe() == "{2^(i)*3^j | i>=3, j>=0}");
    CHECK(FamilySpec{13, 2, 17, 20, 2, std::nullopt}.describe() == "{13*2^(17+20i) | i>=2}");
}
