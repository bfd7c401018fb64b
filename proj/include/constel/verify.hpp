#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "constel/constellation.hpp"
#include "constel/cycle.hpp"

namespace constel {

struct VerifyOptions {
    int64_t max_stage = 13;        // deepest brute-forced cycle
    uint64_t rng_seed = 0x5eed;    // sampling is deterministic
    int random_constellations = 40;
    int random_pairs = 6;
    bool progress = false;
};

struct VerifyItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_ok() const;
};

// Small-instance oracle suite: cycle recursion against the brute-force
// sieve, cycle shape invariants, CRT occurrence counts, exact-instance
// lifting, and the in/out population recurrence against brute-force counts.
VerifyReport run_verification(const VerifyOptions& opts = {});

void write_report(std::ostream& os, const VerifyReport& report);

// Individual checkers, exposed so tests can confirm they detect corrupted
// inputs (e.g. a wrong CRT product must fail, not pass silently).
bool check_crt_count(const GapCycle& g, const Constellation& s, const mpz_class& expected);
bool check_cycle_shape(const GapCycle& g);

// Deterministic random admissible pattern with at most max_gaps gaps.
Constellation random_admissible(uint64_t& state, int max_gaps);

}  // namespace constel
