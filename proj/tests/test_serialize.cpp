#include "recforge/serialize.hpp"

#include "recforge/builtins.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace recforge;
using nlohmann::json;

TEST_CASE("polynomials serialize as decimal strings") {
    const json arr = poly_to_json(IntPoly{1, -2, -1});
    CHECK(arr.dump() == R"(["1","-2","-1"])");
    CHECK(poly_from_json(arr) == IntPoly{1, -2, -1});
    // numbers are accepted on input for convenience
    CHECK(poly_from_json(json::parse("[1,-2,-1]")) == IntPoly{1, -2, -1});
    CHECK_THROWS_AS(poly_from_json(json::parse(R"(["a"])")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"({"q":1})")), std::invalid_argument);
}

TEST_CASE("coefficients above 64 bits survive the round trip") {
    const BigInt big = BigInt("123456789012345678901234567890123456789");
    IntPoly p(std::vector<BigInt>{1, big, -big});
    CHECK(poly_from_json(poly_to_json(p)) == p);
}

TEST_CASE("random polynomials round-trip") {
    std::mt19937_64 rng(0x10);
    for (int trial = 0; trial < 50; ++trial) {
        const TestSpec spec = testutil::random_spec(rng);
        CHECK(poly_from_json(poly_to_json(spec.q)) == spec.q);
        CHECK(poly_from_json(poly_to_json(spec.p)) == spec.p);
    }
}

TEST_CASE("spec documents round-trip and verify derived fields") {
    const TestSpec spec = dbz_spec();
    const json doc = spec_to_json(spec);
    CHECK(doc.at("label") == "dbz");
    CHECK(doc.at("target") == "1");
    const TestSpec back = spec_from_json(doc);
    CHECK(back.q == spec.q);
    CHECK(back.e == spec.e);
    CHECK(back.initial == spec.initial);

    json tampered = doc;
    tampered["initial"][1] = "2";
    CHECK_THROWS_AS(spec_from_json(tampered), std::invalid_argument);
    json q_only{{"q", poly_to_json(spec.q)}};
    CHECK(spec_from_json(q_only).e == spec.e);
}

TEST_CASE("search reports serialize hits as decimal strings") {
    PseudoprimeReport report;
    report.label = "perrin";
    report.lo = 2;
    report.hi = 1000000;
    report.hits = {271441, 904631};
    report.composites_tested = 921500;
    report.elapsed_ms = 1234;
    const json with_time = report_to_json(report);
    CHECK(with_time.at("hits") == json::parse(R"(["271441","904631"])"));
    CHECK(with_time.contains("elapsed_ms"));
    const json stable = report_to_json(report, /*include_timings=*/false);
    CHECK_FALSE(stable.contains("elapsed_ms"));
    CHECK(stable.at("composites_tested") == 921500);
}

TEST_CASE("family reports carry the spec fields") {
    const FamilyReport report =
        verify_family(companion_pell_spec(), {1, 2, 0, 1, 3, 3}, 100);
    const json doc = family_report_to_json(report);
    CHECK(doc.at("test") == "companion-pell");
    CHECK(doc.at("family").at("b2") == 3);
    CHECK(doc.at("cap") == 100);
    CHECK(doc.at("all_pass") == true);
    CHECK(doc.at("members").size() == 8);
    CHECK(doc.at("members")[0] == "8");

    const FamilySpec back = family_from_json(doc.at("family"));
    CHECK(back.c == 1);
    CHECK(back.b2 == 3);
    CHECK_FALSE(family_from_json(json::parse(R"({"c":5,"b":3})")).b2.has_value());
}

TEST_CASE("leaderboards serialize smallest-hit as nullable string") {
    std::vector<LeaderboardEntry> rows;
    rows.push_back({"e(1)", {BigInt(1)}, 3, 4});
    rows.push_back({"e(2)", {BigInt(2)}, 0, std::nullopt});
    const json doc = leaderboard_to_json(rows, 100);
    CHECK(doc.at("bound") == 100);
    CHECK(doc.at("rows")[0].at("smallest") == "4");
    CHECK(doc.at("rows")[1].at("smallest").is_null());
}

TEST_CASE("pattern systems parse from JSON and text") {
    const PatternSystem from_json = pattern_from_json(json::parse(R"({"s":2,"forbidden":["000","11"]})"));
    CHECK(from_json.s == 2);
    CHECK(from_json.forbidden == std::vector<std::string>{"11", "000"});

    const PatternSystem from_text = pattern_from_text("alphabet 2\n000\n11\n");
    CHECK(from_text.forbidden == from_json.forbidden);

    // a JSON document is detected by its first character
    const PatternSystem sniffed = pattern_from_text(R"(  {"s":3,"forbidden":["00"]})");
    CHECK(sniffed.s == 3);

    CHECK_THROWS_AS(pattern_from_text("avoid 2\n000\n"), std::invalid_argument);
    CHECK_THROWS_AS(pattern_from_text("alphabet nope"), std::invalid_argument);
    CHECK(pattern_to_json(from_json).at("forbidden") == json::parse(R"(["11","000"])"));
}
