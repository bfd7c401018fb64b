#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace constel {

// Sieve-backed prime table over [0, limit]. Immutable after construction;
// callers needing a larger range build a new table.
class PrimeTable {
public:
    explicit PrimeTable(int64_t limit);

    int64_t limit() const { return limit_; }
    const std::vector<int64_t>& primes() const { return primes_; }

    bool is_prime(int64_t n) const;

    // Number of primes <= x. Requires x <= limit.
    int64_t pi(int64_t x) const;

    // Smallest prime > n. Requires the answer to lie within the table.
    int64_t next_prime(int64_t n) const;

    // Primes in the inclusive range [lo, hi]. Requires hi <= limit.
    std::vector<int64_t> primes_in(int64_t lo, int64_t hi) const;

private:
    int64_t limit_;
    std::vector<uint8_t> composite_;
    std::vector<int64_t> primes_;
};

// Smallest prime > n, with no table size restriction.
int64_t next_prime_after(int64_t n);

// Product of all primes <= p.
mpz_class primorial(int64_t p);

// Euler phi of the primorial: product of (q - 1) over primes q <= p.
mpz_class phi_primorial(int64_t p);

}  // namespace constel
