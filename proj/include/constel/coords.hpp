#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace constel {

// Mixed-radix primorial coordinates:
//
//   x = c0 + c_{p0} p0# + c_{p1} p1# + ...
//
// where p0 is the base prime, p1, p2, ... the consecutive primes above it,
// 0 <= c0 < p0#, and each coefficient c_p lies in [0, next_prime(p)). The
// representation is unique, like ordinary positional digits.
struct PrimorialCoords {
    int64_t base_prime = 11;
    mpz_class c0;
    std::vector<int64_t> coeffs;  // coeffs[i] multiplies p_i#
};

PrimorialCoords encode(const mpz_class& x, int64_t base_prime = 11);
mpz_class decode(const PrimorialCoords& c);  // validates radix bounds

// Text form "107 +6*11# +8*13#", coefficients in prime order. Round-trips
// byte for byte through coords_from_text.
std::string coords_to_text(const PrimorialCoords& c);
PrimorialCoords coords_from_text(const std::string& text, int64_t default_base_prime = 11);

// CSV table, one row per coordinate set: index, c0, then coefficients in
// prime order. Rows shorter than the widest are padded with empty cells.
void write_prefix_csv(std::ostream& os, const std::vector<PrimorialCoords>& rows);

}  // namespace constel
