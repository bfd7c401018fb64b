#include "constel/population.hpp"

#include <ostream>

#include "constel/admissibility.hpp"
#include "constel/errors.hpp"
#include "constel/primes.hpp"
#include "constel/scientific.hpp"

namespace constel {

RhoProfile rho_profile(const Constellation& s, int64_t lo, int64_t hi) {
    RhoProfile out;
    if (hi < lo) return out;
    PrimeTable pt(hi);
    for (int64_t q : pt.primes_in(lo, hi)) out.values.emplace_back(q, rho(s, q));
    return out;
}

InOutState inout_step(const InOutState& state, int64_t q, int64_t rho_child, int64_t rho_parent) {
    int64_t delta = rho_child - rho_parent;
    if (delta != 0 && delta != 1)
        throw input_error("inout_step: delta = " + std::to_string(delta) +
                          " at q = " + std::to_string(q) + ", not a one-gap extension");
    InOutState next;
    next.stage = q;
    next.n_out = rho_child * state.n_out + delta * state.n_in;
    next.n_in = rho_parent * state.n_in;
    return next;
}

static void require_extension(const Constellation& child, const Constellation& parent) {
    if (parent.length() != child.length() + 1 ||
        (parent.head_child() != child && parent.tail_child() != child))
        throw input_error("parent is not a one-gap extension of child");
}

std::vector<InOutState> inout_trajectory(const Constellation& child, const Constellation& parent,
                                         const InOutState& initial, int64_t end_prime) {
    require_extension(child, parent);
    std::vector<InOutState> series{initial};
    int64_t p = initial.stage;
    while (true) {
        int64_t q = next_prime_after(p);
        if (q > end_prime) break;
        series.push_back(inout_step(series.back(), q, rho(child, q), rho(parent, q)));
        p = q;
    }
    return series;
}

int64_t first_escape_prime(const Constellation& child, const Constellation& parent) {
    require_extension(child, parent);
    // Guaranteed to exist: for primes above half the parent span all points
    // are distinct mod q, which forces rho_child = rho_parent + 1.
    int64_t bound = parent.span() + 2;
    for (int64_t q = 2; q <= bound; q = next_prime_after(q))
        if (rho(child, q) > rho(parent, q)) return q;
    throw input_error("no escape prime found below " + std::to_string(bound));
}

int64_t delta_count(const Constellation& child, const Constellation& parent, int64_t lo, int64_t hi) {
    require_extension(child, parent);
    int64_t count = 0;
    if (hi < lo) return 0;
    PrimeTable pt(hi);
    for (int64_t q : pt.primes_in(lo, hi)) {
        int64_t delta = rho(child, q) - rho(parent, q);
        if (delta != 0 && delta != 1)
            throw input_error("delta out of range at q = " + std::to_string(q));
        count += delta;
    }
    return count;
}

mpz_class population(const Constellation& s, int64_t P, int64_t P0) {
    mpz_class prod = 1;
    if (P <= P0) return prod;
    PrimeTable pt(P);
    for (int64_t q : pt.primes_in(P0 + 1, P)) prod *= rho(s, q);
    return prod;
}

WinfResult winf(const Constellation& s) {
    WinfResult r;
    r.factor_small = 1;
    r.factor_large = 1;

    int64_t jp1 = s.length() + 1;
    int64_t half = s.span() / 2;
    PrimeTable pt(std::max<int64_t>(jp1, std::max<int64_t>(half, 2)));

    for (int64_t q : pt.primes_in(2, jp1)) r.factor_small *= (q - nu(s, q));
    r.admissible = r.factor_small != 0;

    for (int64_t q : pt.primes_in(jp1 + 1, half)) {
        mpq_class term(q - nu(s, q), q - jp1);
        term.canonicalize();
        r.factor_large *= term;
    }
    r.w = r.factor_large * r.factor_small;
    return r;
}

// ---------------------------------------------------------------- CSV ----

void write_rho_table_csv(std::ostream& os, const std::vector<RhoProfile>& rows) {
    os << "index";
    if (!rows.empty())
        for (const auto& [q, _] : rows.front().values) os << "," << q;
    os << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].values.size() != rows.front().values.size())
            throw input_error("rho table rows must share the prime range");
        os << i;
        for (const auto& [_, v] : rows[i].values) os << "," << v;
        os << "\n";
    }
}

void write_winf_csv(std::ostream& os, const std::vector<WinfResult>& rows) {
    os << "index,factor_small,factor_large,w\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        os << i << "," << to_scientific(rows[i].factor_small, 4) << ","
           << to_scientific(rows[i].factor_large, 4) << "," << to_scientific(rows[i].w, 4)
           << "\n";
    }
}

void write_trajectory_csv(std::ostream& os, const std::vector<InOutState>& series,
                          int64_t index, bool header) {
    if (header) {
        if (index >= 0) os << "index,";
        os << "prime,n_out,n_in,ratio,fraction_inside\n";
    }
    for (const auto& st : series) {
        if (index >= 0) os << index << ",";
        os << st.stage << "," << st.n_out.get_str() << "," << st.n_in.get_str() << ",";
        if (st.n_out == 0)
            os << "inf";
        else
            os << to_scientific(mpq_class(st.n_in) / mpq_class(st.n_out), 6);
        mpz_class total = st.n_in + st.n_out;
        os << ",";
        if (total == 0)
            os << "0";
        else
            os << to_scientific(mpq_class(st.n_in) / mpq_class(total), 6);
        os << "\n";
    }
}

}  // namespace constel
