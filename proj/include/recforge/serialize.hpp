#pragma once

#include "recforge/cyclic.hpp"
#include "recforge/families.hpp"
#include "recforge/hunt.hpp"
#include "recforge/testspec.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace recforge {

// Polynomials travel as JSON arrays of decimal coefficient strings in
// ascending degree order; strings rather than numbers so coefficients are
// never squeezed through 64-bit (or double) serializers.

inline nlohmann::json poly_to_json(const IntPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BigInt& c : p.coeffs()) arr.push_back(to_decimal(c));
    return arr;
}

inline nlohmann::json bigints_to_json(const std::vector<BigInt>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BigInt& c : v) arr.push_back(to_decimal(c));
    return arr;
}

inline std::vector<BigInt> bigints_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of coefficient strings");
    std::vector<BigInt> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (item.is_string())
            out.push_back(bigint_from_decimal(item.get<std::string>()));
        else if (item.is_number_integer())
            out.push_back(BigInt(item.get<long long>()));
        else
            throw std::invalid_argument("coefficients must be decimal strings");
    }
    return out;
}

inline IntPoly poly_from_json(const nlohmann::json& arr) { return IntPoly(bigints_from_json(arr)); }

inline nlohmann::json spec_to_json(const TestSpec& spec) {
    return nlohmann::json{{"label", spec.label},
                          {"q", poly_to_json(spec.q)},
                          {"p", poly_to_json(spec.p)},
                          {"e", bigints_to_json(spec.e)},
                          {"initial", bigints_to_json(spec.initial)},
                          {"target", to_decimal(spec.target)}};
}

// Rebuilds the spec from its denominator and cross-checks any derived
// fields present in the document, so a hand-edited file cannot smuggle in
// an inconsistent test.
inline TestSpec spec_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("q")) throw std::invalid_argument("spec JSON needs a 'q' array");
    TestSpec spec = spec_from_denominator(poly_from_json(doc.at("q")),
                                          doc.value("label", std::string("unnamed")));
    if (doc.contains("p") && poly_from_json(doc.at("p")) != spec.p)
        throw std::invalid_argument("spec JSON: 'p' does not match the numerator derived from 'q'");
    if (doc.contains("e") && bigints_from_json(doc.at("e")) != spec.e)
        throw std::invalid_argument("spec JSON: 'e' does not match 'q'");
    if (doc.contains("initial") && bigints_from_json(doc.at("initial")) != spec.initial)
        throw std::invalid_argument("spec JSON: 'initial' does not match 'q'");
    if (doc.contains("target") && bigint_from_decimal(doc.at("target").get<std::string>()) != spec.target)
        throw std::invalid_argument("spec JSON: 'target' does not match 'q'");
    return spec;
}

// {label, lo, hi, hits: [decimal strings], composites_tested, elapsed_ms};
// elapsed_ms is dropped in stable mode so reports can be compared byte for
// byte across runs and worker counts.
inline nlohmann::json report_to_json(const PseudoprimeReport& report, bool include_timings = true) {
    nlohmann::json hits = nlohmann::json::array();
    for (std::uint64_t h : report.hits) hits.push_back(std::to_string(h));
    nlohmann::json doc{{"label", report.label},
                       {"lo", report.lo},
                       {"hi", report.hi},
                       {"hits", hits},
                       {"composites_tested", report.composites_tested}};
    if (include_timings) doc["elapsed_ms"] = report.elapsed_ms;
    return doc;
}

inline nlohmann::json family_to_json(const FamilySpec& f) {
    nlohmann::json doc{{"c", f.c}, {"b", f.b}, {"a", f.a}, {"d", f.d}, {"i0", f.i0}};
    if (f.b2) doc["b2"] = *f.b2;
    return doc;
}

inline FamilySpec family_from_json(const nlohmann::json& doc) {
    FamilySpec f;
    f.c = doc.value("c", std::uint64_t{1});
    f.b = doc.value("b", std::uint64_t{2});
    f.a = doc.value("a", std::uint64_t{0});
    f.d = doc.value("d", std::uint64_t{1});
    f.i0 = doc.value("i0", std::uint64_t{0});
    if (doc.contains("b2")) f.b2 = doc.at("b2").get<std::uint64_t>();
    return f;
}

inline nlohmann::json family_report_to_json(const FamilyReport& report) {
    nlohmann::json members = nlohmann::json::array();
    for (const MemberCheck& m : report.members) members.push_back(std::to_string(m.n));
    nlohmann::json doc{{"test", report.test_label},
                       {"family", family_to_json(report.family)},
                       {"cap", report.cap},
                       {"members", members},
                       {"all_pass", report.all_pass}};
    if (!report.notes.empty()) doc["notes"] = report.notes;
    return doc;
}

inline nlohmann::json leaderboard_to_json(const std::vector<LeaderboardEntry>& entries,
                                          std::uint64_t bound) {
    nlohmann::json rows = nlohmann::json::array();
    for (const LeaderboardEntry& entry : entries) {
        nlohmann::json row{{"label", entry.label},
                           {"e", bigints_to_json(entry.e)},
                           {"hit_count", entry.hit_count}};
        row["smallest"] = entry.smallest ? nlohmann::json(std::to_string(*entry.smallest))
                                         : nlohmann::json(nullptr);
        rows.push_back(row);
    }
    return nlohmann::json{{"bound", bound}, {"rows", rows}};
}

inline nlohmann::json pattern_to_json(const PatternSystem& ps) {
    return nlohmann::json{{"s", ps.s}, {"forbidden", ps.forbidden}};
}

inline PatternSystem pattern_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("s") || !doc.contains("forbidden"))
        throw std::invalid_argument("pattern JSON needs 's' and 'forbidden'");
    return make_pattern_system(doc.at("s").get<unsigned>(),
                               doc.at("forbidden").get<std::vector<std::string>>());
}

// Text grammar: first line "alphabet <s>", then one forbidden word per
// line. A document starting with '{' is treated as the JSON form instead.
inline PatternSystem pattern_from_text(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return pattern_from_json(nlohmann::json::parse(text));
    std::istringstream in(text);
    std::string keyword;
    unsigned s = 0;
    if (!(in >> keyword >> s) || keyword != "alphabet")
        throw std::invalid_argument("pattern text must start with 'alphabet <size>'");
    std::vector<std::string> forbidden;
    std::string word;
    while (in >> word) forbidden.push_back(word);
    return make_pattern_system(s, std::move(forbidden));
}

}  // namespace recforge
