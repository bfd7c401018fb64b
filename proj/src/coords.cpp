#include "constel/coords.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "constel/errors.hpp"
#include "constel/primes.hpp"

namespace constel {

namespace {

void check_base(int64_t base_prime) {
    if (base_prime < 2 || next_prime_after(base_prime - 1) != base_prime)
        throw input_error("base prime must be prime");
}

// The consecutive primes p_0 = base, p_1, ... p_count.
std::vector<int64_t> prime_run(int64_t base_prime, size_t count) {
    std::vector<int64_t> ps{base_prime};
    while (ps.size() <= count) ps.push_back(next_prime_after(ps.back()));
    return ps;
}

}  // namespace

PrimorialCoords encode(const mpz_class& x, int64_t base_prime) {
    if (x < 0) throw input_error("encode: value must be nonnegative");
    check_base(base_prime);

    PrimorialCoords c;
    c.base_prime = base_prime;
    mpz_class B = primorial(base_prime);
    c.c0 = x % B;
    mpz_class r = x / B;
    int64_t p = base_prime;
    while (r > 0) {
        int64_t q = next_prime_after(p);
        mpz_class digit = r % q;
        c.coeffs.push_back(static_cast<int64_t>(digit.get_si()));
        r /= q;
        p = q;
    }
    return c;
}

mpz_class decode(const PrimorialCoords& c) {
    check_base(c.base_prime);
    mpz_class B = primorial(c.base_prime);
    if (c.c0 < 0 || c.c0 >= B) throw input_error("decode: c0 out of range");

    std::vector<int64_t> ps = prime_run(c.base_prime, c.coeffs.size());
    for (size_t i = 0; i < c.coeffs.size(); ++i)
        if (c.coeffs[i] < 0 || c.coeffs[i] >= ps[i + 1])
            throw input_error("decode: coefficient " + std::to_string(c.coeffs[i]) +
                              " of " + std::to_string(ps[i]) + "# out of range");

    // Horner, most significant digit first: the radix above p_i# is p_{i+1}.
    mpz_class acc = 0;
    for (size_t i = c.coeffs.size(); i-- > 1;) {
        acc += c.coeffs[i];
        acc *= ps[i];
    }
    if (!c.coeffs.empty()) acc += c.coeffs[0];
    return c.c0 + B * acc;
}

std::string coords_to_text(const PrimorialCoords& c) {
    std::ostringstream os;
    os << c.c0.get_str();
    std::vector<int64_t> ps = prime_run(c.base_prime, c.coeffs.size());
    for (size_t i = 0; i < c.coeffs.size(); ++i)
        os << " +" << c.coeffs[i] << "*" << ps[i] << "#";
    return os.str();
}

PrimorialCoords coords_from_text(const std::string& text, int64_t default_base_prime) {
    std::istringstream is(text);
    PrimorialCoords c;
    std::string tok;
    if (!(is >> tok)) throw input_error("coordinate text is empty");
    c.c0 = mpz_class(tok);
    c.base_prime = default_base_prime;

    std::vector<int64_t> primes_seen;
    while (is >> tok) {
        // "+6*11#"
        size_t star = tok.find('*');
        if (tok.empty() || tok[0] != '+' || star == std::string::npos || tok.back() != '#')
            throw input_error("bad coordinate term: " + tok);
        int64_t coeff = std::stoll(tok.substr(1, star - 1));
        int64_t prime = std::stoll(tok.substr(star + 1, tok.size() - star - 2));
        primes_seen.push_back(prime);
        c.coeffs.push_back(coeff);
    }

    if (!primes_seen.empty()) {
        c.base_prime = primes_seen.front();
        std::vector<int64_t> expected = prime_run(c.base_prime, primes_seen.size() - 1);
        if (primes_seen != expected)
            throw input_error("coordinate terms must use consecutive primes");
    }
    decode(c);  // range validation
    return c;
}

void write_prefix_csv(std::ostream& os, const std::vector<PrimorialCoords>& rows) {
    size_t width = 0;
    int64_t base = rows.empty() ? 11 : rows.front().base_prime;
    for (const auto& r : rows) {
        if (r.base_prime != base)
            throw input_error("prefix table rows must share a base prime");
        width = std::max(width, r.coeffs.size());
    }

    os << "index,c0";
    std::vector<int64_t> ps = prime_run(base, width);
    for (size_t i = 0; i < width; ++i) os << "," << ps[i] << "#";
    os << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        os << i << "," << rows[i].c0.get_str();
        for (size_t j = 0; j < width; ++j) {
            os << ",";
            if (j < rows[i].coeffs.size()) os << rows[i].coeffs[j];
        }
        os << "\n";
    }
}

}  // namespace constel
