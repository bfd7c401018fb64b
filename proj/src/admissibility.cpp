#include "constel/admissibility.hpp"

#include <vector>

#include "constel/errors.hpp"

namespace constel {

int64_t nu(const Constellation& s, int64_t m) {
    if (m < 1) throw input_error("nu: modulus must be positive");
    std::vector<char> seen(static_cast<size_t>(m), 0);
    int64_t count = 0;
    for (int64_t pt : s.points()) {
        int64_t r = pt % m;
        if (!seen[r]) {
            seen[r] = 1;
            ++count;
        }
    }
    return count;
}

int64_t rho(const Constellation& s, int64_t m) {
    return m - nu(s, m);
}

bool is_admissible(const Constellation& s) {
    int64_t bound = s.length() + 1;
    if (bound < 2) return true;
    PrimeTable pt(bound);
    for (int64_t q : pt.primes())
        if (nu(s, q) == q) return false;
    return true;
}

bool is_nonconvex(const Constellation& s, const PrimeTable& pt) {
    if (pt.limit() < s.span()) throw input_error("is_nonconvex: table does not cover the span");
    return pt.pi(s.span()) < s.length();
}

}  // namespace constel
