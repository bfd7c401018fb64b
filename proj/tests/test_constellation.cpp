#include "doctest.h"

#include "constel/constellation.hpp"
#include "constel/errors.hpp"

using namespace constel;

TEST_CASE("gaps, span, points") {
    Constellation s({2, 4, 2});
    CHECK(s.length() == 3);
    CHECK(s.span() == 8);
    CHECK(s.points() == std::vector<int64_t>{0, 2, 6, 8});
    CHECK(s.str() == "2 4 2");

    Constellation empty;
    CHECK(empty.length() == 0);
    CHECK(empty.span() == 0);
    CHECK(empty.points() == std::vector<int64_t>{0});
}

TEST_CASE("gaps must be positive and even") {
    CHECK_THROWS_AS(Constellation({2, 3}), input_error);
    CHECK_THROWS_AS(Constellation({0}), input_error);
    CHECK_THROWS_AS(Constellation({-2}), input_error);
}

TEST_CASE("reverse") {
    Constellation s({2, 4, 6});
    CHECK(s.reverse() == Constellation({6, 4, 2}));
    CHECK(s.reverse().reverse() == s);
    CHECK(s.reverse().span() == s.span());
}

TEST_CASE("one-gap contractions and extensions") {
    Constellation p({2, 4, 2});
    CHECK(p.head_child() == Constellation({2, 4}));
    CHECK(p.tail_child() == Constellation({4, 2}));
    CHECK(p.head_child().extend_right(2) == p);
    CHECK(p.tail_child().extend_left(2) == p);
    CHECK_THROWS_AS(Constellation().head_child(), input_error);
    CHECK_THROWS_AS(Constellation().tail_child(), input_error);
    CHECK_THROWS_AS(p.extend_left(3), input_error);
}

TEST_CASE("parse_gap_list accepts spaces and commas") {
    CHECK(parse_gap_list("2 4 2") == Constellation({2, 4, 2}));
    CHECK(parse_gap_list("2,4,2") == Constellation({2, 4, 2}));
    CHECK(parse_gap_list(" 6 ") == Constellation({6}));
    CHECK(parse_gap_list("") == Constellation());
    CHECK_THROWS_AS(parse_gap_list("2 x"), input_error);
}
