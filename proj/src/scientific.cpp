#include "constel/scientific.hpp"

#include <cctype>
#include <cstdlib>

#include "constel/errors.hpp"

namespace constel {

namespace {

mpz_class pow10z(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

}  // namespace

std::string to_scientific(const mpq_class& v, int significant_digits) {
    if (significant_digits < 1) throw input_error("significant_digits must be >= 1");
    int s = sgn(v);
    if (s == 0) return "0";

    mpq_class a = abs(v);
    const mpz_class& n = a.get_num();
    const mpz_class& d = a.get_den();

    // Decimal exponent e with 10^e <= a < 10^(e+1). The digit-count estimate
    // is off by at most one, so nudge it with exact comparisons.
    long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10));
    auto cmp_pow = [&](long k) {
        // sign of a - 10^k without leaving the integers
        if (k >= 0) return cmp(n, d * pow10z(k));
        return cmp(n * pow10z(-k), d);
    };
    while (cmp_pow(e) < 0) --e;
    while (cmp_pow(e + 1) >= 0) ++e;

    // Integer mantissa: round a / 10^(e - sig + 1) half to even.
    long shift = e - significant_digits + 1;
    mpz_class num = n, den = d;
    if (shift >= 0)
        den *= pow10z(shift);
    else
        num *= pow10z(-shift);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    int c = cmp(r * 2, den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t())))
        ++q;
    if (q == pow10z(significant_digits)) {  // rounded up into a new digit
        q /= 10;
        ++e;
    }

    std::string digits = q.get_str();
    std::string out;
    if (s < 0) out += '-';
    out += digits[0];
    if (significant_digits > 1) {
        out += '.';
        out += digits.substr(1);
    }
    out += 'e';
    out += std::to_string(e);
    return out;
}

std::string to_scientific(const mpz_class& v, int significant_digits) {
    return to_scientific(mpq_class(v), significant_digits);
}

mpq_class mpq_from_scientific(const std::string& text) {
    if (text == "0") return mpq_class(0);
    size_t epos = text.find_first_of("eE");
    if (epos == std::string::npos) throw input_error("bad scientific literal: " + text);
    std::string mant = text.substr(0, epos);
    long expo = std::strtol(text.c_str() + epos + 1, nullptr, 10);

    bool neg = false;
    size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) neg = mant[i++] == '-';
    std::string digits;
    long frac = 0;
    bool seen_dot = false;
    for (; i < mant.size(); ++i) {
        if (mant[i] == '.') {
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(mant[i]))) {
            digits += mant[i];
            if (seen_dot) ++frac;
        } else {
            throw input_error("bad scientific literal: " + text);
        }
    }
    if (digits.empty()) throw input_error("bad scientific literal: " + text);

    mpq_class r{mpz_class(digits)};
    long net = expo - frac;
    if (net >= 0)
        r *= mpq_class(pow10z(net));
    else
        r /= mpq_class(pow10z(-net));
    if (neg) r = -r;
    return r;
}

}  // namespace constel
