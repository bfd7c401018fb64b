#include "doctest.h"

#include "constel/admissibility.hpp"
#include "constel/errors.hpp"
#include "constel/verify.hpp"

using namespace constel;

TEST_CASE("nu counts distinct point residues") {
    Constellation s({2, 4, 2});  // points 0 2 6 8
    CHECK(nu(s, 2) == 1);
    CHECK(nu(s, 3) == 2);        // 0 2 0 2
    CHECK(nu(s, 5) == 4);        // 0 2 1 3
    CHECK(nu(s, 7) == 4);        // 0 2 6 1
    CHECK(nu(s, 11) == 4);
    CHECK(rho(s, 5) == 1);
    CHECK(rho(s, 7) == 3);
    CHECK_THROWS_AS(nu(s, 0), input_error);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(Constellation()));
    CHECK(is_admissible(Constellation({2})));
    CHECK(is_admissible(Constellation({2, 4})));
    CHECK(is_admissible(Constellation({2, 4, 2})));
    CHECK(is_admissible(Constellation({6, 4, 2})));
    // 0 2 4 covers all residues mod 3
    CHECK_FALSE(is_admissible(Constellation({2, 2})));
    // 0 2 6 8 14 covers all residues mod 5
    CHECK_FALSE(is_admissible(Constellation({2, 4, 2, 6})));
    // ... while 0 2 6 8 12 leaves residue 4 mod 5 free
    CHECK(is_admissible(Constellation({2, 4, 2, 4})));
}

TEST_CASE("admissibility only depends on primes up to J+1") {
    // span 96 with J=2: points 0 48 96 share one residue mod 2 and mod 3,
    // and nu mod q < q holds automatically for q > 3
    CHECK(is_admissible(Constellation({48, 48})));
}

TEST_CASE("nonconvexity compares J against pi(span)") {
    PrimeTable pt(200);
    // pi(8) = 4 >= 3, so the prime quadruplet pattern is convex
    CHECK_FALSE(is_nonconvex(Constellation({2, 4, 2}), pt));
    // a sparse pattern is nowhere near nonconvex
    CHECK_FALSE(is_nonconvex(Constellation({100}), pt));
    // the predicate is pi(span) < J alone; it does not test admissibility.
    // Ten gaps of 2: span 20, pi(20) = 8 < 10.
    Constellation dense(std::vector<int64_t>(10, 2));
    CHECK(is_nonconvex(dense, pt));
    CHECK_FALSE(is_admissible(dense));
}

TEST_CASE("reversal invariance of nu and admissibility") {
    uint64_t state = 12345;
    for (int i = 0; i < 50; ++i) {
        Constellation s = random_admissible(state, 6);
        Constellation r = s.reverse();
        for (int64_t m : {2, 3, 5, 7, 11, 13})
            CHECK(nu(s, m) == nu(r, m));
        CHECK(is_admissible(r));
    }
}
