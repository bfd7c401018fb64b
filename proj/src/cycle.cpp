#include "constel/cycle.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "constel/admissibility.hpp"
#include "constel/errors.hpp"
#include "constel/primes.hpp"

namespace constel {

namespace {

// Residues mod p# of the p-rough numbers, as a sorted list. These are just
// the cycle's points 1, 1+g0, ... below p#, so no sieving is repeated.
struct CycleView {
    int64_t period = 0;
    std::vector<int64_t> rough;

    bool is_rough(int64_t v) const {
        int64_t r = v % period;
        if (r < 0) r += period;
        return std::binary_search(rough.begin(), rough.end(), r);
    }
};

CycleView make_view(const GapCycle& g) {
    CycleView v;
    v.period = g.period();
    v.rough.reserve(g.gaps.size());
    int64_t x = 1;
    v.rough.push_back(x);
    for (size_t i = 0; i + 1 < g.gaps.size(); ++i) {
        x += g.gaps[i];
        v.rough.push_back(x);
    }
    return v;
}

// Count rough values strictly inside the span that are not pattern points.
int64_t interior_rough_count(const CycleView& v, const std::vector<int64_t>& pts,
                             int64_t span, int64_t gamma0) {
    int64_t count = 0;
    size_t pi = 1;  // pts[0] == 0
    for (int64_t t = 1; t < span; ++t) {
        while (pi < pts.size() && pts[pi] < t) ++pi;
        if (pi < pts.size() && pts[pi] == t) continue;
        if (v.is_rough(gamma0 + t)) ++count;
    }
    return count;
}

bool survives(const CycleView& v, const std::vector<int64_t>& pts, int64_t gamma0) {
    for (int64_t pt : pts)
        if (!v.is_rough(gamma0 + pt)) return false;
    return true;
}

Occurrence classify(const CycleView& v, const std::vector<int64_t>& pts, int64_t span,
                    int64_t gamma0) {
    Occurrence o;
    o.gamma0 = gamma0;
    o.interior_rough = interior_rough_count(v, pts, span, gamma0);
    o.kind = o.interior_rough == 0 ? OccKind::exact_instance : OccKind::driving_term;
    return o;
}

}  // namespace

int64_t GapCycle::period() const {
    int64_t sum = 0;
    for (int64_t g : gaps) sum += g;
    return sum;
}

GapCycle build_cycle_bruteforce(int64_t p, uint64_t budget_bytes) {
    if (p < 2 || !PrimeTable(p).is_prime(p)) throw input_error("cycle stage must be prime");

    mpz_class P = primorial(p);
    mpz_class phi = phi_primorial(p);
    // flag byte per value in [0, p#+1] plus the output gap vector
    mpz_class need = P + 2 + phi * static_cast<long>(sizeof(int64_t));
    if (!need.fits_ulong_p() || need.get_ui() > budget_bytes)
        throw budget_error("G(" + std::to_string(p) + "#) exceeds the cycle budget",
                           need.fits_ulong_p() ? need.get_ui() : ~0ull, budget_bytes);

    int64_t period = static_cast<int64_t>(P.get_ui());
    std::vector<uint8_t> marked(static_cast<size_t>(period) + 2, 0);
    PrimeTable pt(p);
    for (int64_t q : pt.primes())
        for (int64_t m = q; m <= period + 1; m += q) marked[m] = 1;

    GapCycle g;
    g.p = p;
    g.gaps.reserve(static_cast<size_t>(phi.get_ui()));
    int64_t prev = 1;
    for (int64_t x = 2; x <= period + 1; ++x) {
        if (!marked[x]) {
            g.gaps.push_back(x - prev);
            prev = x;
        }
    }
    return g;
}

GapCycle next_cycle_by_recursion(const GapCycle& g, uint64_t budget_bytes) {
    if (g.gaps.empty()) throw input_error("empty cycle");
    int64_t q = next_prime_after(g.p);
    uint64_t out_len = static_cast<uint64_t>(q - 1) * g.gaps.size();
    uint64_t need = out_len * sizeof(int64_t);
    if (need > budget_bytes)
        throw budget_error("G(" + std::to_string(q) + "#) exceeds the cycle budget", need,
                           budget_bytes);

    // Walk q concatenated copies. A point divisible by q is one of the
    // phi(p#) values q*r with r rough, and fusing there merges its two
    // neighbouring gaps.
    GapCycle out;
    out.p = q;
    out.gaps.reserve(out_len);
    int64_t point = 1;
    int64_t acc = 0;
    for (int64_t copy = 0; copy < q; ++copy) {
        for (int64_t gap : g.gaps) {
            point += gap;
            acc += gap;
            if (point % q != 0) {
                out.gaps.push_back(acc);
                acc = 0;
            }
        }
    }
    return out;
}

std::vector<Occurrence> find_occurrences(const GapCycle& g, const Constellation& s) {
    CycleView v = make_view(g);
    std::vector<int64_t> pts = s.points();
    std::vector<Occurrence> occ;
    for (int64_t gamma0 : v.rough)
        if (survives(v, pts, gamma0)) occ.push_back(classify(v, pts, s.span(), gamma0));
    return occ;
}

mpz_class count_point_survivals_crt(const Constellation& s, int64_t p) {
    PrimeTable pt(p);
    mpz_class count = 1;
    for (int64_t q : pt.primes()) count *= rho(s, q);
    return count;
}

InOutCount count_in_out(const GapCycle& g, const Constellation& child, const Constellation& parent) {
    if (parent.length() != child.length() + 1)
        throw input_error("parent is not a one-gap extension of child");
    int64_t shift;
    if (parent.head_child() == child)
        shift = 0;  // gap added on the right; images share gamma0
    else if (parent.tail_child() == child)
        shift = parent.gaps().front();  // child image starts one gap inside the parent
    else
        throw input_error("parent is not a one-gap extension of child");

    CycleView v = make_view(g);
    std::vector<int64_t> cpts = child.points();
    std::vector<int64_t> ppts = parent.points();

    InOutCount counts;
    for (int64_t gamma0 : v.rough) {
        if (!survives(v, cpts, gamma0)) continue;
        if (interior_rough_count(v, cpts, child.span(), gamma0) != 0) continue;
        int64_t pg = gamma0 - shift;
        bool inside = survives(v, ppts, pg) &&
                      interior_rough_count(v, ppts, parent.span(), pg) == 0;
        if (inside)
            ++counts.n_in;
        else
            ++counts.n_out;
    }
    return counts;
}

void write_cycle(std::ostream& os, const GapCycle& g) {
    os << "# G(" << g.p << "#) p=" << g.p << " len=" << g.gaps.size()
       << " sum=" << g.period() << "\n";
    for (int64_t gap : g.gaps) os << gap << "\n";
}

GapCycle read_cycle(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("# G(", 0) != 0)
        throw input_error("cycle dump: missing header");
    GapCycle g;
    size_t ppos = header.find("p=");
    if (ppos == std::string::npos) throw input_error("cycle dump: header lacks p=");
    g.p = std::stoll(header.substr(ppos + 2));

    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        g.gaps.push_back(std::stoll(line));
    }

    size_t lpos = header.find("len=");
    size_t spos = header.find("sum=");
    if (lpos != std::string::npos &&
        std::stoll(header.substr(lpos + 4)) != static_cast<int64_t>(g.gaps.size()))
        throw input_error("cycle dump: length does not match header");
    if (spos != std::string::npos && std::stoll(header.substr(spos + 4)) != g.period())
        throw input_error("cycle dump: sum does not match header");
    return g;
}

}  // namespace constel
