#pragma once

#include "recforge/testspec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recforge {

// Built-in tests, addressable by label from the CLI and the catalog.
//
// perrin: the classical test, a(p) == 0 (mod p). Recurrence
// a(n) = a(n-2) + a(n-3) with a(0)=3, a(1)=0, a(2)=2 (OEIS A001608);
// smallest pseudoprimes 271441 and 904631.
inline TestSpec perrin_spec() { return spec_from_denominator(IntPoly{1, 0, -1, -1}, "perrin"); }

// lucas: a(p) == 1 (mod p) over the Lucas numbers 2, 1, 3, 4, 7, ...
inline TestSpec lucas_spec() { return spec_from_denominator(IntPoly{1, -1, -1}, "lucas"); }

// companion-pell: a(n) = (1+sqrt 2)^n + (1-sqrt 2)^n, a(p) == 2 (mod p).
inline TestSpec companion_pell_spec() {
    return spec_from_denominator(IntPoly{1, -2, -1}, "companion-pell");
}

// dbz: order-7 test with a(p) == 1 (mod p); smallest pseudoprimes
// 1531398 and 114009582.
inline TestSpec dbz_spec() {
    return spec_from_denominator(IntPoly{1, -1, -1, 0, -1, 0, 0, -4}, "dbz");
}

inline TestSpec t2_spec() { return spec_from_denominator(IntPoly{1, -1, -2}, "t2"); }
inline TestSpec t3_spec() { return spec_from_denominator(IntPoly{1, -2, -2}, "t3"); }
inline TestSpec t4_spec() { return spec_from_denominator(IntPoly{1, 0, 2, 2}, "t4"); }
inline TestSpec t5_spec() { return spec_from_denominator(IntPoly{1, -1, -2, -1}, "t5"); }

inline const std::vector<std::string>& named_spec_labels() {
    static const std::vector<std::string> labels = {"perrin", "lucas", "companion-pell", "t1",
                                                    "t2",     "t3",    "t4",             "t5",
                                                    "dbz"};
    return labels;
}

inline std::optional<TestSpec> find_named_spec(const std::string& name) {
    if (name == "perrin") return perrin_spec();
    if (name == "lucas") return lucas_spec();
    if (name == "companion-pell" || name == "t1") return companion_pell_spec();
    if (name == "t2") return t2_spec();
    if (name == "t3") return t3_spec();
    if (name == "t4") return t4_spec();
    if (name == "t5") return t5_spec();
    if (name == "dbz") return dbz_spec();
    return std::nullopt;
}

}  // namespace recforge
