#include "doctest.h"

#include <sstream>

#include "constel/errors.hpp"
#include "constel/ingest.hpp"

using namespace constel;

TEST_CASE("offsets format") {
    std::istringstream is("0 2 6 8\n0, 4, 6, 10\n");
    TupleFile f = parse_tuples(is, TupleFormat::offsets);
    REQUIRE(f.records.size() == 2);
    CHECK(f.records[0].s == Constellation({2, 4, 2}));
    CHECK(f.records[0].line == 1);
    CHECK(f.records[1].s == Constellation({4, 2, 4}));
    CHECK(f.records[1].line == 2);
}

TEST_CASE("gaps format skips comments and blanks") {
    std::istringstream is("2,4,2\n\n# a comment\n6 4 2\n");
    TupleFile f = parse_tuples(is, TupleFormat::gaps);
    REQUIRE(f.records.size() == 2);
    CHECK(f.records[0].s == Constellation({2, 4, 2}));
    CHECK(f.records[1].s == Constellation({6, 4, 2}));
    CHECK(f.records[1].line == 4);
}

TEST_CASE("malformed rows report their line number") {
    auto expect_message = [](const std::string& text, TupleFormat fmt, const std::string& want) {
        std::istringstream is(text);
        try {
            parse_tuples(is, fmt);
            FAIL("expected input_error for: " << text);
        } catch (const input_error& e) {
            CHECK(std::string(e.what()).find(want) != std::string::npos);
        }
    };
    expect_message("0 2\n1 3 5\n", TupleFormat::offsets, "line 2");
    expect_message("0 2 1\n", TupleFormat::offsets, "line 1");
    expect_message("2 4 x\n", TupleFormat::gaps, "line 1");
    expect_message("2 3\n", TupleFormat::gaps, "line 1");
    expect_message("0 6 2\n", TupleFormat::offsets, "line 1");
}

TEST_CASE("write and re-read both formats") {
    TupleFile f = fixtures();
    for (TupleFormat fmt : {TupleFormat::offsets, TupleFormat::gaps}) {
        std::ostringstream os;
        write_tuples(os, f, fmt);
        std::istringstream is(os.str());
        TupleFile back = parse_tuples(is, fmt);
        REQUIRE(back.records.size() == f.records.size());
        for (size_t i = 0; i < f.records.size(); ++i)
            CHECK(back.records[i].s == f.records[i].s);
    }
}

TEST_CASE("fixture corpus") {
    TupleFile f = fixtures();
    REQUIRE(f.records.size() == 10);
    CHECK(f.records[3].s == Constellation({2, 4, 2}));
    // the last record is the lone inadmissible pattern, kept for error paths
    CHECK(f.records.back().s == Constellation({2, 2}));
}

TEST_CASE("family index over a toy pair of parents") {
    // Base stage 3: (2,4,6,2) and its mirror both have the unique image
    // gamma0 = 5 in G(3#), and each stays unique through G(5#) before
    // branching at 7.
    std::istringstream is("2 4 6 2\n2 6 4 2\n");
    TupleFile parents = parse_tuples(is, TupleFormat::gaps);
    FamilyOptions opts;
    opts.expected_count = 2;
    opts.expected_length = 4;
    opts.expected_span = 14;
    opts.base_prime = 3;
    FamilyIndex fam = build_family_index(parents, opts);

    REQUIRE(fam.parents.size() == 2);
    REQUIRE(fam.children.size() == 4);

    CHECK(fam.parents[0].s == Constellation({2, 4, 6, 2}));
    CHECK(fam.parents[1].s == Constellation({2, 6, 4, 2}));
    for (const auto& p : fam.parents) {
        CHECK(p.role == Role::parent);
        CHECK(p.seed_gamma0 == 5);
        CHECK(p.prefix_valid);
        CHECK(p.terminal_stage == 7);
    }
    // unique images in G(5#): 17 = 5 + 2*3# and 29 = 5 + 4*3#
    CHECK(fam.parents[0].prefix.coeffs == std::vector<int64_t>{2});
    CHECK(fam.parents[1].prefix.coeffs == std::vector<int64_t>{4});

    // children: heads in parent order, then tails
    CHECK(fam.children[0].s == Constellation({2, 4, 6}));
    CHECK(fam.children[1].s == Constellation({2, 6, 4}));
    CHECK(fam.children[2].s == Constellation({4, 6, 2}));
    CHECK(fam.children[3].s == Constellation({6, 4, 2}));
    CHECK(fam.children[0].role == Role::head);
    CHECK(fam.children[3].role == Role::tail);
    CHECK(fam.children[0].parent_index == 0);
    CHECK(fam.children[2].parent_index == 0);
    CHECK(fam.children[3].parent_index == 1);
    // a head shares its parent's seed; a tail starts one gap later,
    // reduced into the period (5 + 2 - 3# = 1)
    CHECK(fam.children[0].seed_gamma0 == 5);
    CHECK(fam.children[2].seed_gamma0 == 1);

    // reversal pairing: parent j <-> parent (count-1-j), child j <-> child (2*count-1-j)
    for (size_t j = 0; j < fam.parents.size(); ++j)
        CHECK(fam.parents[j].s.reverse() == fam.parents[fam.parents.size() - 1 - j].s);
    for (size_t j = 0; j < fam.children.size(); ++j)
        CHECK(fam.children[j].s.reverse() == fam.children[fam.children.size() - 1 - j].s);

    // indices are assigned by prefix order, not input order
    std::istringstream swapped("2 6 4 2\n2 4 6 2\n");
    FamilyIndex fam2 = build_family_index(parse_tuples(swapped, TupleFormat::gaps), opts);
    CHECK(fam2.parents[0].s == Constellation({2, 4, 6, 2}));
    CHECK(fam2.children[0].s == Constellation({2, 4, 6}));
}

TEST_CASE("family validation failures") {
    FamilyOptions opts;
    opts.expected_count = 2;
    opts.expected_length = 4;
    opts.expected_span = 14;
    opts.base_prime = 3;

    auto build_from = [&](const std::string& text) {
        std::istringstream is(text);
        TupleFile parents = parse_tuples(is, TupleFormat::gaps);
        return build_family_index(parents, opts);
    };

    CHECK_THROWS_AS(build_from("2 4 6 2\n"), input_error);                    // wrong count
    CHECK_THROWS_AS(build_from("2 4 6 2\n2 6 4 4\n"), input_error);           // wrong span / end gap
    CHECK_THROWS_AS(build_from("2 4 6 2\n4 4 4 2\n"), input_error);           // must begin with 2
    CHECK_THROWS_AS(build_from("2 4 6 2\n2 4 6 2\n"), input_error);           // not reversal-closed
    CHECK_THROWS_AS(build_from("2 2 8 2\n2 8 2 2\n"), input_error);           // inadmissible parents
}

TEST_CASE("family jsonl dump") {
    std::istringstream is("2 4 6 2\n2 6 4 2\n");
    TupleFile parents = parse_tuples(is, TupleFormat::gaps);
    FamilyOptions opts;
    opts.expected_count = 2;
    opts.expected_length = 4;
    opts.expected_span = 14;
    opts.base_prime = 3;
    FamilyIndex fam = build_family_index(parents, opts);

    std::ostringstream os;
    write_family_jsonl(os, fam);
    std::istringstream lines(os.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line ==
          R"({"index":0,"role":"parent","gaps":[2,4,6,2],"span":14,"J":4})");
    int count = 1;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 6);
}
