#include "doctest.h"

#include <sstream>

#include "constel/admissibility.hpp"
#include "constel/cycle.hpp"
#include "constel/errors.hpp"
#include "constel/population.hpp"
#include "constel/scientific.hpp"
#include "constel/verify.hpp"

using namespace constel;

TEST_CASE("rho profile over a prime range") {
    RhoProfile r = rho_profile(Constellation({2, 4, 2}), 2, 13);
    REQUIRE(r.values.size() == 6);
    CHECK(r.values[0] == std::pair<int64_t, int64_t>{2, 1});
    CHECK(r.values[1] == std::pair<int64_t, int64_t>{3, 1});
    CHECK(r.values[2] == std::pair<int64_t, int64_t>{5, 1});
    CHECK(r.values[3] == std::pair<int64_t, int64_t>{7, 3});
    CHECK(r.values[4] == std::pair<int64_t, int64_t>{11, 7});
    CHECK(r.values[5] == std::pair<int64_t, int64_t>{13, 9});
}

TEST_CASE("population multiplies rho over a stage range") {
    Constellation s({2, 4, 2});
    // primes in (5, 13]: 7, 11, 13 with rho 3, 7, 9
    CHECK(population(s, 13, 5) == 189);
    CHECK(population(s, 5, 5) == 1);
    CHECK(population(Constellation({2, 2}), 13, 2) == 0);  // dies at 3
}

TEST_CASE("one in/out step") {
    InOutState st;
    st.stage = 3;
    st.n_out = 0;
    st.n_in = 1;
    InOutState nx = inout_step(st, 5, 2, 1);
    CHECK(nx.stage == 5);
    CHECK(nx.n_out == 1);
    CHECK(nx.n_in == 1);
    // delta outside {0,1} cannot come from a one-gap extension
    CHECK_THROWS_AS(inout_step(st, 5, 4, 1), input_error);
    CHECK_THROWS_AS(inout_step(st, 5, 1, 2), input_error);
}

TEST_CASE("trajectory for (2,4) inside (2,4,2)") {
    Constellation child({2, 4});
    Constellation parent({2, 4, 2});
    InOutState init;
    init.stage = 3;
    init.n_out = 0;
    init.n_in = 1;
    auto series = inout_trajectory(child, parent, init, 13);
    REQUIRE(series.size() == 5);  // stages 3, 5, 7, 11, 13
    CHECK(series[1].n_out == 1);
    CHECK(series[1].n_in == 1);
    CHECK(series[2].n_out == 5);
    CHECK(series[2].n_in == 3);
    CHECK(series[3].n_out == 43);
    CHECK(series[3].n_in == 21);
    CHECK(series[4].n_out == 451);
    CHECK(series[4].n_in == 189);

    // the closed form tracks the sieve exactly here: (2,4) and (2,4,2) have
    // no driving terms from G(5#) on
    GapCycle g = build_cycle_bruteforce(5);
    for (size_t i = 1; i < series.size(); ++i) {
        InOutCount c = count_in_out(g, child, parent);
        CHECK(series[i].n_in == c.n_in);
        CHECK(series[i].n_out == c.n_out);
        if (i + 1 < series.size()) g = next_cycle_by_recursion(g);
    }
}

TEST_CASE("population conservation inside the trajectory") {
    // n_in + n_out at each stage equals the total exact-child count, which
    // itself multiplies by rho_child; n_in multiplies by rho_parent.
    Constellation child({4, 2});
    Constellation parent({2, 4, 2});
    InOutState init;
    init.stage = 5;
    init.n_out = 7;
    init.n_in = 3;
    auto series = inout_trajectory(child, parent, init, 31);
    for (size_t i = 1; i < series.size(); ++i) {
        int64_t q = series[i].stage;
        CHECK(series[i].n_in == series[i - 1].n_in * rho(parent, q));
        // the total multiplies by rho_child regardless of the in/out split
        CHECK(series[i].n_in + series[i].n_out ==
              (series[i - 1].n_in + series[i - 1].n_out) * rho(child, q));
    }
}

TEST_CASE("first escape prime") {
    CHECK(first_escape_prime(Constellation({2, 4}), Constellation({2, 4, 2})) == 5);
    CHECK(first_escape_prime(Constellation({4, 2}), Constellation({2, 4, 2})) == 5);
    CHECK(first_escape_prime(Constellation({2}), Constellation({2, 4})) == 5);
}

TEST_CASE("delta counts") {
    Constellation child({2, 4});
    Constellation parent({2, 4, 2});
    // delta = 1 at 5, 7, 11, 13 (rho grows by one per stage for this pair)
    CHECK(delta_count(child, parent, 5, 13) == 4);
    CHECK(delta_count(child, parent, 2, 3) == 0);
    // above max(J+1, span/2) every prime has delta = 1
    CHECK(delta_count(child, parent, 5, 97) == 23);  // pi(97) - pi(3)
}

TEST_CASE("winf fixture values") {
    WinfResult one = winf(Constellation({2}));
    CHECK(one.admissible);
    CHECK(one.factor_small == 1);
    CHECK(one.factor_large == 1);
    CHECK(one.w == 1);

    WinfResult six = winf(Constellation({6}));
    // factor_small = (2-1)(1 free residue mod 2): nu_2 = 1 -> 1; factor_large
    // covers q = 3: (3 - 1)/(3 - 2) = 2
    CHECK(six.factor_small == 1);
    CHECK(six.factor_large == 2);
    CHECK(six.w == 2);

    WinfResult quad = winf(Constellation({2, 4, 6, 2}));
    CHECK(quad.factor_small == 1);
    CHECK(quad.factor_large == mpq_class(3, 2));
    CHECK(quad.w == mpq_class(3, 2));

    WinfResult dead = winf(Constellation({2, 2}));
    CHECK_FALSE(dead.admissible);
    CHECK(dead.factor_small == 0);
    CHECK(dead.w == 0);
}

TEST_CASE("winf is reversal invariant") {
    uint64_t state = 2026;
    for (int i = 0; i < 30; ++i) {
        Constellation s = random_admissible(state, 6);
        WinfResult a = winf(s);
        WinfResult b = winf(s.reverse());
        CHECK(a.w == b.w);
        CHECK(a.factor_small == b.factor_small);
    }
}

TEST_CASE("csv emitters") {
    std::ostringstream rho_os;
    write_rho_table_csv(rho_os, {rho_profile(Constellation({2, 4, 2}), 2, 7)});
    CHECK(rho_os.str() == "index,2,3,5,7\n0,1,1,1,3\n");

    std::ostringstream winf_os;
    write_winf_csv(winf_os, {winf(Constellation({6}))});
    CHECK(winf_os.str() ==
          "index,factor_small,factor_large,w\n0,1.000e0,2.000e0,2.000e0\n");

    InOutState init;
    init.stage = 3;
    init.n_out = 0;
    init.n_in = 1;
    auto series = inout_trajectory(Constellation({2, 4}), Constellation({2, 4, 2}), init, 5);
    std::ostringstream tr_os;
    write_trajectory_csv(tr_os, series);
    CHECK(tr_os.str() ==
          "prime,n_out,n_in,ratio,fraction_inside\n"
          "3,0,1,inf,1.00000e0\n"
          "5,1,1,1.00000e0,5.00000e-1\n");
}
