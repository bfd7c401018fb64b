#pragma once

#include <string>

#include <gmpxx.h>

namespace constel {

// Exact scientific rendering: "<mantissa>e<exponent>" with the mantissa
// rounded half-to-even at the requested number of significant digits.
// All arithmetic is integer; no doubles are involved. Zero renders as "0".
std::string to_scientific(const mpq_class& v, int significant_digits);
std::string to_scientific(const mpz_class& v, int significant_digits);

// Inverse of the rendering, e.g. "1.101e89" -> 1101 * 10^86 as an exact
// rational. Used by tests to compare reference strings at reduced precision.
mpq_class mpq_from_scientific(const std::string& text);

}  // namespace constel
