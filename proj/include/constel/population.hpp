#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "constel/constellation.hpp"

namespace constel {

// rho(s, q) over the primes q in an inclusive range.
struct RhoProfile {
    std::vector<std::pair<int64_t, int64_t>> values;  // (prime, rho)
};
RhoProfile rho_profile(const Constellation& s, int64_t lo, int64_t hi);

// Counts of child instances outside / inside exact parent instances at one
// sieve stage.
struct InOutState {
    int64_t stage = 0;
    mpz_class n_out;
    mpz_class n_in;
};

// One step of the population recurrence for a one-gap extension pair with
// delta = rho_child(q) - rho_parent(q):
//
//   n_out' = rho_child(q) * n_out + delta * n_in
//   n_in'  = rho_parent(q) * n_in
//
// delta must be 0 or 1; anything else means the pair is not a one-gap
// extension (or the rho values are wrong) and is rejected.
InOutState inout_step(const InOutState& state, int64_t q, int64_t rho_child, int64_t rho_parent);

// Iterate inout_step over consecutive primes from the initial stage through
// end_prime. The returned series includes the initial state.
std::vector<InOutState> inout_trajectory(const Constellation& child, const Constellation& parent,
                                         const InOutState& initial, int64_t end_prime);

// Smallest prime q with rho(child, q) > rho(parent, q): the stage where
// instances of the child first escape their parents.
int64_t first_escape_prime(const Constellation& child, const Constellation& parent);

// Number of primes q in [lo, hi] with rho(child, q) - rho(parent, q) = 1.
int64_t delta_count(const Constellation& child, const Constellation& parent, int64_t lo, int64_t hi);

// Product of rho(s, q) over primes P0 < q <= P: the factor by which the
// population of images multiplies between the two stages.
mpz_class population(const Constellation& s, int64_t P, int64_t P0);

// Asymptotic relative population
//
//   w = prod_{q <= J+1} (q - nu_q) * prod_{J+1 < q <= span/2} (q - nu_q)/(q - J - 1)
//
// kept as exact integers/rationals. factor_small equals population(s, J+1, 1);
// it is zero exactly when s is inadmissible, and then w = 0.
struct WinfResult {
    bool admissible = false;
    mpz_class factor_small;
    mpq_class factor_large;
    mpq_class w;
};
WinfResult winf(const Constellation& s);

// CSV emitters. All numeric rendering is deterministic; big integers are
// written in full decimal, ratios in 6-digit scientific form.
void write_rho_table_csv(std::ostream& os, const std::vector<RhoProfile>& rows);
void write_winf_csv(std::ostream& os, const std::vector<WinfResult>& rows);
// Header "prime,n_out,n_in,ratio,fraction_inside"; ratio renders as "inf"
// while n_out = 0. with_index prepends an index column (family runs).
void write_trajectory_csv(std::ostream& os, const std::vector<InOutState>& series,
                          int64_t index = -1, bool header = true);

}  // namespace constel
