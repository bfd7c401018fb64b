#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "constel/constellation.hpp"
#include "constel/coords.hpp"
#include "constel/cycle.hpp"

namespace constel {

enum class TupleFormat { offsets, gaps };

struct TupleRecord {
    Constellation s;
    int64_t line = 0;  // 1-based line in the source file
};

struct TupleFile {
    std::vector<TupleRecord> records;
};

// One record per line; fields split on whitespace and commas; '#' comment
// lines and blank lines are skipped. Offsets must start at 0 and be strictly
// increasing with even differences. Errors carry the line number.
TupleFile parse_tuples(std::istream& is, TupleFormat format);
TupleFile parse_tuples_file(const std::string& path, TupleFormat format);
void write_tuples(std::ostream& os, const TupleFile& tuples, TupleFormat format);

// Small bundled patterns for tests and demos. All records are admissible
// except the last, (2,2), kept for negative tests.
TupleFile fixtures();

enum class Role { parent, head, tail };

struct FamilyMember {
    Constellation s;
    Role role = Role::parent;
    int64_t index = 0;         // within the role's index space
    int64_t parent_index = 0;  // for children; equals index for parents
    mpz_class seed_gamma0;     // unique image in the base cycle
    PrimorialCoords prefix;    // unique prefix from that seed
    int64_t terminal_stage = 0;
    bool prefix_valid = false;
};

struct FamilyOptions {
    int64_t expected_count = 58;
    int64_t expected_length = 459;  // J of each parent
    int64_t expected_span = 3242;
    int64_t base_prime = 11;
    uint64_t cycle_budget = kDefaultCycleBudget;
};

// A family of parent constellations (each beginning and ending with gap 2)
// together with their head [2 s'] and tail [s' 2] children.
//
// Parents are ordered by (seed residue c0, then decoded unique prefix); the
// mirror symmetry of the cycles makes this order satisfy
// reverse(parent j) = parent (count-1-j). Children are indexed per seed
// block as heads-then-tails in parent order, which under the same symmetry
// gives reverse(child j) = child (2*count-1-j).
struct FamilyIndex {
    std::vector<FamilyMember> parents;
    std::vector<FamilyMember> children;  // 2 * parents.size()
};

FamilyIndex build_family_index(const TupleFile& parents, const FamilyOptions& opts = {});

// JSON lines, fixed field order: index, role, gaps, span, J. Parents first,
// then children.
void write_family_jsonl(std::ostream& os, const FamilyIndex& family);

}  // namespace constel
