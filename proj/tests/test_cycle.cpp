#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "constel/admissibility.hpp"
#include "constel/cycle.hpp"
#include "constel/errors.hpp"
#include "constel/primes.hpp"
#include "constel/verify.hpp"

using namespace constel;

namespace {

std::vector<int64_t> gammas(const std::vector<Occurrence>& occ, OccKind kind) {
    std::vector<int64_t> out;
    for (const auto& o : occ)
        if (o.kind == kind) out.push_back(o.gamma0);
    return out;
}

std::vector<int64_t> gammas(const std::vector<Occurrence>& occ) {
    std::vector<int64_t> out;
    for (const auto& o : occ) out.push_back(o.gamma0);
    return out;
}

}  // namespace

TEST_CASE("small cycles by brute force") {
    // 3-rough numbers: 1, 5, 7, 11, ... and 5-rough: 1, 7, 11, 13, 17, 19, 23, 29, 31, ...
    CHECK(build_cycle_bruteforce(2).gaps == std::vector<int64_t>{2});
    CHECK(build_cycle_bruteforce(3).gaps == std::vector<int64_t>{4, 2});
    CHECK(build_cycle_bruteforce(5).gaps == std::vector<int64_t>{6, 4, 2, 4, 2, 4, 6, 2});
    CHECK(build_cycle_bruteforce(5).period() == 30);
    CHECK_THROWS_AS(build_cycle_bruteforce(9), input_error);
}

TEST_CASE("shape invariants up to 13") {
    for (int64_t p : {2, 3, 5, 7, 11, 13}) {
        GapCycle g = build_cycle_bruteforce(p);
        CAPTURE(p);
        CHECK(g.period() == primorial(p));
        CHECK(mpz_class(static_cast<long>(g.gaps.size())) == phi_primorial(p));
        CHECK(g.gaps.back() == 2);
        CHECK(check_cycle_shape(g));
    }
}

TEST_CASE("recursion matches brute force") {
    GapCycle g = build_cycle_bruteforce(3);
    for (int64_t p : {5, 7, 11, 13}) {
        g = next_cycle_by_recursion(g);
        CHECK(g.p == p);
        CHECK(g.gaps == build_cycle_bruteforce(p).gaps);
    }
}

TEST_CASE("budget errors carry the required size") {
    try {
        build_cycle_bruteforce(23, 1024);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.budget == 1024);
        CHECK(e.required > e.budget);
    }
    CHECK_THROWS_AS(next_cycle_by_recursion(build_cycle_bruteforce(13), 1024), budget_error);
}

TEST_CASE("twin occurrences in G(5#)") {
    GapCycle g5 = build_cycle_bruteforce(5);
    auto occ = find_occurrences(g5, Constellation({2}));
    // (11,13), (17,19), (29,31): interior of a twin has no room for a rough point
    CHECK(gammas(occ) == std::vector<int64_t>{11, 17, 29});
    for (const auto& o : occ) {
        CHECK(o.kind == OccKind::exact_instance);
        CHECK(o.interior_rough == 0);
    }
    CHECK(count_point_survivals_crt(Constellation({2}), 5) == 3);
}

TEST_CASE("quadruplet occurrences in G(7#)") {
    GapCycle g7 = build_cycle_bruteforce(7);
    auto occ = find_occurrences(g7, Constellation({2, 4, 2}));
    // 11 13 17 19, 101 103 107 109, 191 193 197 199
    CHECK(gammas(occ) == std::vector<int64_t>{11, 101, 191});
    CHECK(count_point_survivals_crt(Constellation({2, 4, 2}), 7) == 3);
}

TEST_CASE("driving terms versus exact instances for the single gap 6") {
    Constellation s({6});
    GapCycle g3 = build_cycle_bruteforce(3);
    auto occ3 = find_occurrences(g3, s);
    // 1..7 and 5..11 both straddle one interior rough point, so both drive
    CHECK(gammas(occ3) == std::vector<int64_t>{1, 5});
    CHECK(gammas(occ3, OccKind::exact_instance).empty());
    CHECK(occ3[0].interior_rough == 1);
    CHECK(occ3[1].interior_rough == 1);

    GapCycle g5 = build_cycle_bruteforce(5);
    auto occ5 = find_occurrences(g5, s);
    CHECK(gammas(occ5, OccKind::exact_instance) == std::vector<int64_t>{1, 23});
    CHECK(gammas(occ5, OccKind::driving_term) == std::vector<int64_t>{7, 11, 13, 17});
    CHECK(mpz_class(static_cast<long>(occ5.size())) == count_point_survivals_crt(s, 5));
}

TEST_CASE("occurrences wrap around the period") {
    // In G(3#) the image 5, 7=1+6 of the twin pattern crosses the period end.
    GapCycle g3 = build_cycle_bruteforce(3);
    auto occ = find_occurrences(g3, Constellation({2}));
    CHECK(gammas(occ) == std::vector<int64_t>{5});
}

TEST_CASE("occurrence sets mirror under reversal") {
    GapCycle g7 = build_cycle_bruteforce(7);
    Constellation s({2, 6, 4});
    auto occ = find_occurrences(g7, s);
    auto rev = find_occurrences(g7, s.reverse());
    REQUIRE(occ.size() == rev.size());
    // gamma0 -> p# - gamma0 - span maps images of s onto images of reverse(s)
    std::vector<int64_t> mapped;
    for (const auto& o : occ) {
        int64_t m = (g7.period() - o.gamma0 - s.span()) % g7.period();
        if (m <= 0) m += g7.period();
        mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == gammas(rev));
}

TEST_CASE("in/out counts for the pair (2,4) inside (2,4,2)") {
    Constellation child({2, 4});
    Constellation parent({2, 4, 2});
    GapCycle g3 = build_cycle_bruteforce(3);
    InOutCount c3 = count_in_out(g3, child, parent);
    CHECK(c3.n_in == 1);
    CHECK(c3.n_out == 0);

    GapCycle g5 = build_cycle_bruteforce(5);
    InOutCount c5 = count_in_out(g5, child, parent);
    CHECK(c5.n_in == 1);   // 11 13 17 inside 11 13 17 19
    CHECK(c5.n_out == 1);  // 17 19 23 with no parent image at 17

    CHECK_THROWS_AS(count_in_out(g5, child, Constellation({4, 4, 4})), input_error);
    CHECK_THROWS_AS(count_in_out(g5, child, Constellation({2, 4, 2, 4})), input_error);
}

TEST_CASE("cycle text dump round trip") {
    GapCycle g = build_cycle_bruteforce(11);
    std::ostringstream os;
    write_cycle(os, g);
    std::string text = os.str();
    CHECK(text.substr(0, 30) == "# G(11#) p=11 len=480 sum=2310");
    std::istringstream is(text);
    GapCycle back = read_cycle(is);
    CHECK(back.p == g.p);
    CHECK(back.gaps == g.gaps);

    std::istringstream bad("# G(11#) p=11 len=480 sum=9999\n4\n2\n");
    CHECK_THROWS_AS(read_cycle(bad), input_error);
}
