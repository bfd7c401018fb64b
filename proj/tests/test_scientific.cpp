#include "doctest.h"

#include <cstdint>

#include "constel/errors.hpp"
#include "constel/scientific.hpp"

using namespace constel;

TEST_CASE("basic rendering keeps the requested digit count") {
    CHECK(to_scientific(mpq_class(1), 4) == "1.000e0");
    CHECK(to_scientific(mpq_class(1), 6) == "1.00000e0");
    CHECK(to_scientific(mpq_class(1, 2), 6) == "5.00000e-1");
    CHECK(to_scientific(mpq_class(42), 3) == "4.20e1");
    CHECK(to_scientific(mpq_class(0), 5) == "0");
    CHECK(to_scientific(mpq_class(-42), 3) == "-4.20e1");
    CHECK(to_scientific(mpz_class("1000000000000000000000"), 3) == "1.00e21");
}

TEST_CASE("single significant digit has no decimal point") {
    CHECK(to_scientific(mpq_class(7), 1) == "7e0");
    CHECK(to_scientific(mpq_class(15), 1) == "2e1");   // ties go to even: 1.5 -> 2
    CHECK(to_scientific(mpq_class(25), 1) == "2e1");   // 2.5 -> 2
}

TEST_CASE("rounding is half-to-even on the exact value") {
    CHECK(to_scientific(mpz_class(999949), 4) == "9.999e5");
    CHECK(to_scientific(mpz_class(999950), 4) == "1.000e6");  // 9999.5 -> 10000
    CHECK(to_scientific(mpz_class(999850), 4) == "9.998e5");  // 9998.5 -> 9998
    CHECK(to_scientific(mpq_class(1, 3), 4) == "3.333e-1");
    CHECK(to_scientific(mpq_class(2, 3), 4) == "6.667e-1");
}

TEST_CASE("carry across the mantissa renormalizes the exponent") {
    CHECK(to_scientific(mpq_class(9999, 10000), 3) == "1.00e0");
    CHECK(to_scientific(mpq_class(99999999), 4) == "1.000e8");
}

TEST_CASE("parsing scientific strings back to exact rationals") {
    mpz_class e86 = 1;
    for (int i = 0; i < 86; ++i) e86 *= 10;
    CHECK(mpq_from_scientific("1.101e89") == mpq_class(1101) * mpq_class(e86));
    CHECK(mpq_from_scientific("5e-1") == mpq_class(1, 2));
    CHECK(mpq_from_scientific("-2.5e1") == mpq_class(-25));
    CHECK(mpq_from_scientific("0") == 0);
    CHECK_THROWS_AS(mpq_from_scientific("fish"), input_error);
}

TEST_CASE("round trip at fixed precision is stable") {
    uint64_t state = 99;
    for (int i = 0; i < 200; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        mpz_class num(static_cast<unsigned long>(state >> 16));
        mpq_class v(num, 977);
        std::string s = to_scientific(v, 8);
        // rendering the parsed value again reproduces the string exactly
        CHECK(to_scientific(mpq_from_scientific(s), 8) == s);
    }
}
