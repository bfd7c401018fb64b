#pragma once

#include <cstdint>

#include "constel/constellation.hpp"
#include "constel/primes.hpp"

namespace constel {

// Number of distinct residues mod m covered by the J+1 points of s.
int64_t nu(const Constellation& s, int64_t m);

// Residue classes mod m left free by s: rho(s, m) = m - nu(s, m).
int64_t rho(const Constellation& s, int64_t m);

// Admissible: for every prime q <= J+1 the points leave at least one
// residue class mod q uncovered. Primes above J+1 can never be covered
// by J+1 points, so the check stops there.
bool is_admissible(const Constellation& s);

// Nonconvex: admissibility packs more points into [0, span] than the
// prime counting function allows, i.e. pi(span) < J. The table must
// cover span().
bool is_nonconvex(const Constellation& s, const PrimeTable& pt);

}  // namespace constel
