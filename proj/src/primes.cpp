#include "constel/primes.hpp"

#include <algorithm>

#include "constel/errors.hpp"

namespace constel {

PrimeTable::PrimeTable(int64_t limit) : limit_(limit) {
    if (limit < 0) throw input_error("prime table limit must be nonnegative");
    composite_.assign(static_cast<size_t>(limit) + 1, 0);
    if (limit >= 0) composite_[0] = 1;
    if (limit >= 1) composite_[1] = 1;
    for (int64_t i = 2; i * i <= limit; ++i) {
        if (composite_[i]) continue;
        for (int64_t m = i * i; m <= limit; m += i) composite_[m] = 1;
    }
    for (int64_t i = 2; i <= limit; ++i)
        if (!composite_[i]) primes_.push_back(i);
}

bool PrimeTable::is_prime(int64_t n) const {
    if (n < 0 || n > limit_) throw input_error("is_prime: value outside table range");
    return !composite_[n];
}

int64_t PrimeTable::pi(int64_t x) const {
    if (x > limit_) throw input_error("pi: value outside table range");
    if (x < 2) return 0;
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return it - primes_.begin();
}

int64_t PrimeTable::next_prime(int64_t n) const {
    auto it = std::upper_bound(primes_.begin(), primes_.end(), n);
    if (it == primes_.end()) throw input_error("next_prime: beyond table range");
    return *it;
}

std::vector<int64_t> PrimeTable::primes_in(int64_t lo, int64_t hi) const {
    if (hi > limit_) throw input_error("primes_in: range beyond table limit");
    if (hi < lo) return {};
    auto first = std::lower_bound(primes_.begin(), primes_.end(), lo);
    auto last = std::upper_bound(primes_.begin(), primes_.end(), hi);
    return {first, last};
}

int64_t next_prime_after(int64_t n) {
    if (n < 2) return 2;
    mpz_class cur(static_cast<long>(n)), nxt;
    mpz_nextprime(nxt.get_mpz_t(), cur.get_mpz_t());
    return static_cast<int64_t>(nxt.get_si());
}

mpz_class primorial(int64_t p) {
    if (p < 2) return 1;
    mpz_class r;
    mpz_primorial_ui(r.get_mpz_t(), static_cast<unsigned long>(p));
    return r;
}

mpz_class phi_primorial(int64_t p) {
    mpz_class r = 1;
    PrimeTable pt(p < 0 ? 0 : p);
    for (int64_t q : pt.primes()) r *= (q - 1);
    return r;
}

}  // namespace constel
