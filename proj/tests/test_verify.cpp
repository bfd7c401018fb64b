#include "doctest.h"

#include <sstream>

#include "constel/admissibility.hpp"
#include "constel/cycle.hpp"
#include "constel/errors.hpp"
#include "constel/verify.hpp"

using namespace constel;

TEST_CASE("checkers accept correct values") {
    GapCycle g7 = build_cycle_bruteforce(7);
    CHECK(check_cycle_shape(g7));
    CHECK(check_crt_count(g7, Constellation({2}), 15));
    CHECK(check_crt_count(g7, Constellation({2, 4, 2}), 3));
}

TEST_CASE("checkers reject corrupted values") {
    GapCycle g7 = build_cycle_bruteforce(7);
    // an off-by-one expectation must be reported, not absorbed
    CHECK_FALSE(check_crt_count(g7, Constellation({2}), 14));
    CHECK_FALSE(check_crt_count(g7, Constellation({2}), 16));

    GapCycle broken = g7;
    std::swap(broken.gaps[0], broken.gaps[1]);
    CHECK_FALSE(check_cycle_shape(broken));  // palindrome violated

    broken = g7;
    broken.gaps.back() = 4;
    broken.gaps.front() -= 2;
    CHECK_FALSE(check_cycle_shape(broken));  // final gap must be 2

    broken = g7;
    broken.gaps.push_back(2);
    CHECK_FALSE(check_cycle_shape(broken));  // length and sum off
}

TEST_CASE("random admissible generator") {
    uint64_t state = 1;
    for (int i = 0; i < 100; ++i) {
        Constellation s = random_admissible(state, 5);
        CHECK(s.length() >= 1);
        CHECK(s.length() <= 5);
        CHECK(is_admissible(s));
    }
    // deterministic for a given state
    uint64_t a = 42, b = 42;
    CHECK(random_admissible(a, 5) == random_admissible(b, 5));
}

TEST_CASE("full verification run is green") {
    VerifyOptions opts;
    opts.max_stage = 11;
    opts.random_constellations = 15;
    opts.random_pairs = 3;
    VerifyReport rep = run_verification(opts);
    CHECK(rep.all_ok());
    for (const auto& item : rep.items) {
        CAPTURE(item.name);
        CAPTURE(item.detail);
        CHECK(item.ok);
    }

    std::ostringstream os;
    write_report(os, rep);
    CHECK(os.str().find("0 failed") != std::string::npos);
    CHECK(os.str().find("FAIL") == std::string::npos);
}

TEST_CASE("verification options are validated") {
    VerifyOptions opts;
    opts.max_stage = 2;
    CHECK_THROWS_AS(run_verification(opts), input_error);
}
