#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

#include "constel/constellation.hpp"

namespace constel {

constexpr uint64_t kDefaultCycleBudget = 64ull << 20;  // 64 MiB working set

// The cycle of gaps G(p#) between consecutive p-rough numbers starting at 1.
// It has phi(p#) gaps summing to p#; the final gap (from p#-1 to p#+1) is 2,
// and the first phi(p#)-1 gaps form a palindrome.
struct GapCycle {
    int64_t p = 0;               // sieve stage
    std::vector<int64_t> gaps;

    int64_t period() const;      // sum of gaps, equals p#
};

enum class OccKind { exact_instance, driving_term };

// An image of a constellation's point set inside a cycle: all J+1 points of
// gamma0 + points(s) are p-rough (periodically, mod p#). It is an exact
// instance when no further rough number lies strictly inside the span;
// otherwise the extra interior rough points make it a driving term that can
// fuse into the constellation at later stages.
struct Occurrence {
    int64_t gamma0 = 0;
    OccKind kind = OccKind::driving_term;
    int64_t interior_rough = 0;
};

// Exact child instances split by whether the aligned parent image is an
// exact instance of the parent.
struct InOutCount {
    int64_t n_in = 0;
    int64_t n_out = 0;
};

// Sieve [1, p#+1] directly. Fails with budget_error when the working set
// (p# + 2 flag bytes plus the gap vector) would exceed the budget; the
// default admits p <= 19.
GapCycle build_cycle_bruteforce(int64_t p, uint64_t budget_bytes = kDefaultCycleBudget);

// G(p#) -> G(q#) for q = next prime: concatenate q copies of the cycle and
// fuse the pairs of gaps meeting at each point divisible by q. Streams the
// copies, so the working set is just the output vector.
GapCycle next_cycle_by_recursion(const GapCycle& g, uint64_t budget_bytes = kDefaultCycleBudget);

// All occurrences of s in the cycle, gamma0 in [1, p#], wraparound included
// (roughness is periodic mod p#). Sorted by gamma0.
std::vector<Occurrence> find_occurrences(const GapCycle& g, const Constellation& s);

// Chinese-remainder count of the images of s in G(p#): product of rho(s, q)
// over primes q <= p. Counts both kinds of occurrence.
mpz_class count_point_survivals_crt(const Constellation& s, int64_t p);

// Requires parent to be a one-gap extension of child (either side). Counts
// exact instances of the child that do / do not sit inside an exact parent
// instance at the aligned offset.
InOutCount count_in_out(const GapCycle& g, const Constellation& child, const Constellation& parent);

// Text dump: "# G(p#) p=<p> len=<phi(p#)> sum=<p#>" then one gap per line.
void write_cycle(std::ostream& os, const GapCycle& g);
GapCycle read_cycle(std::istream& is);

}  // namespace constel
