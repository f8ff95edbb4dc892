#include "recforge/intpoly.hpp"

#include <doctest.h>

using recforge::BigInt;
using recforge::IntPoly;

TEST_CASE("canonical form trims trailing zeros") {
    IntPoly p{1, -2, -1, 0, 0};
    CHECK(p.degree() == 2);
    CHECK(p.coeffs().size() == 3);
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK_FALSE(IntPoly{}.degree().has_value());
}

TEST_CASE("coefficient access and evaluation at zero") {
    IntPoly p{7, -6, -5, 0, -3};
    CHECK(p.coeff(0) == 7);
    CHECK(p.coeff(4) == -3);
    CHECK(p.coeff(9) == 0);
    CHECK(p.eval(0) == p.coeff(0));
    CHECK(p.eval(2) == 7 - 12 - 20 - 48);
}

TEST_CASE("arithmetic") {
    IntPoly a{1, 2}, b{0, 1, 3};
    CHECK(a + b == IntPoly{1, 3, 3});
    CHECK(a - a == IntPoly{});
    CHECK(a * b == IntPoly{0, 1, 5, 6});
    CHECK(BigInt(3) * a == IntPoly{3, 6});
    CHECK(-a == IntPoly{-1, -2});
    CHECK(a.shifted_up(2) == IntPoly{0, 0, 1, 2});
    CHECK(IntPoly{}.shifted_up(3).is_zero());
}

TEST_CASE("derivative") {
    CHECK(IntPoly{1, -1, -1, 0, -1, 0, 0, -4}.derivative() == IntPoly{-1, -2, 0, -4, 0, 0, -28});
    CHECK(IntPoly{5}.derivative().is_zero());
}

TEST_CASE("pretty printing") {
    CHECK(IntPoly{1, -2, -1}.to_string() == "1 - 2x - x^2");
    CHECK(IntPoly{2, -2}.to_string() == "2 - 2x");
    CHECK(IntPoly{3, 0, 2}.to_string() == "3 + 2x^2");
    CHECK(IntPoly{}.to_string() == "0");
    CHECK(IntPoly{0, 1}.to_string() == "x");
    CHECK(IntPoly{-1, -1, 0, 1}.to_string("y") == "-1 - y + y^3");
}
