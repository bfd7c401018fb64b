#include "constel/bfs.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "constel/admissibility.hpp"
#include "constel/errors.hpp"
#include "constel/primes.hpp"

namespace constel {

namespace {

// Does gamma0 + points avoid the residue 0 mod every prime q <= stage?
bool survives_all_primes(const Constellation& s, const mpz_class& gamma0, int64_t stage) {
    std::vector<int64_t> pts = s.points();
    PrimeTable pt(stage);
    for (int64_t q : pt.primes()) {
        int64_t g = static_cast<int64_t>(mpz_fdiv_ui(gamma0.get_mpz_t(), static_cast<unsigned long>(q)));
        for (int64_t p : pts)
            if ((g + p) % q == 0) return false;
    }
    return true;
}

// Exact instance iff every non-point offset strictly inside the span has a
// prime factor <= stage at gamma0 + t. Sieve the offsets instead of trial
// dividing each value.
OccKind classify_kind(const Constellation& s, const mpz_class& gamma0,
                      const std::vector<int64_t>& primes) {
    int64_t span = s.span();
    if (span <= 2) return OccKind::exact_instance;  // no interior offsets to check
    std::vector<char> composite(static_cast<size_t>(span), 0);
    for (int64_t q : primes) {
        int64_t g = static_cast<int64_t>(mpz_fdiv_ui(gamma0.get_mpz_t(), static_cast<unsigned long>(q)));
        int64_t t0 = (q - g % q) % q;  // smallest t >= 0 with q | gamma0 + t
        for (int64_t t = t0; t < span; t += q) composite[t] = 1;
    }
    std::vector<int64_t> pts = s.points();
    size_t pi = 1;
    for (int64_t t = 1; t < span; ++t) {
        while (pi < pts.size() && pts[pi] < t) ++pi;
        if (pi < pts.size() && pts[pi] == t) continue;
        if (!composite[t]) return OccKind::driving_term;
    }
    return OccKind::exact_instance;
}

// Residues r mod q for which r + points covers no multiple of q. Exactly
// rho(s, q) residues survive.
std::vector<char> allowed_residues(const Constellation& s, int64_t q) {
    std::vector<char> allowed(static_cast<size_t>(q), 1);
    for (int64_t p : s.points()) allowed[(q - p % q) % q] = 0;
    return allowed;
}

char kind_char(OccKind k) { return k == OccKind::exact_instance ? 'e' : 'd'; }

OccKind kind_from_char(char c) {
    if (c == 'e') return OccKind::exact_instance;
    if (c == 'd') return OccKind::driving_term;
    throw input_error("bfs log: bad kind marker");
}

void log_stage(std::ofstream& os, const BfsStage& st) {
    for (const auto& n : st.nodes)
        os << st.stage << " " << n.parent << " " << n.lift_k << " " << kind_char(n.kind) << "\n";
    os.flush();
}

}  // namespace

BfsResult bfs_instances(const Constellation& s, const mpz_class& seed_gamma0,
                        int64_t seed_stage, int64_t up_to_prime, const BfsOptions& opts) {
    if (seed_stage < 2 || next_prime_after(seed_stage - 1) != seed_stage)
        throw input_error("seed stage must be prime");
    if (seed_gamma0 < 1 || seed_gamma0 > primorial(seed_stage))
        throw input_error("seed gamma0 out of range [1, stage#]");
    if (!survives_all_primes(s, seed_gamma0, seed_stage))
        throw input_error("seed is not a surviving image at its stage");

    BfsResult result;
    BfsStage first;
    first.stage = seed_stage;
    InstanceNode seed;
    seed.gamma0 = seed_gamma0;
    seed.stage = seed_stage;
    seed.kind = classify_kind(s, seed_gamma0, PrimeTable(seed_stage).primes());
    first.nodes.push_back(seed);
    result.stages.push_back(std::move(first));

    if (!opts.log_path.empty()) {
        std::ofstream os(opts.log_path, std::ios::trunc);
        if (!os) throw input_error("cannot open bfs log " + opts.log_path);
        os << "# bfs gaps=" << s.str() << " seed=" << seed_gamma0.get_str()
           << "@" << seed_stage << "\n";
        log_stage(os, result.stages.back());
    }

    bfs_extend(s, result, up_to_prime, opts);
    return result;
}

void bfs_extend(const Constellation& s, BfsResult& result, int64_t up_to_prime,
                const BfsOptions& opts) {
    if (result.stages.empty()) throw input_error("bfs_extend: empty result");

    std::ofstream log;
    if (!opts.log_path.empty()) {
        log.open(opts.log_path, std::ios::app);
        if (!log) throw input_error("cannot open bfs log " + opts.log_path);
    }

    int64_t p = result.stages.back().stage;
    mpz_class psharp = primorial(p);
    PrimeTable small(p);
    std::vector<int64_t> sieve_primes = small.primes();

    while (p < up_to_prime) {
        int64_t q = next_prime_after(p);
        if (q > up_to_prime) break;
        const BfsStage& prev = result.stages.back();

        std::vector<char> allowed = allowed_residues(s, q);
        int64_t m = static_cast<int64_t>(mpz_fdiv_ui(psharp.get_mpz_t(), static_cast<unsigned long>(q)));

        BfsStage next;
        next.stage = q;
        sieve_primes.push_back(q);
        for (size_t i = 0; i < prev.nodes.size(); ++i) {
            const InstanceNode& node = prev.nodes[i];
            int64_t g = static_cast<int64_t>(mpz_fdiv_ui(node.gamma0.get_mpz_t(), static_cast<unsigned long>(q)));
            for (int64_t k = 0; k < q; ++k) {
                if (!allowed[(g + k * m % q) % q]) continue;
                InstanceNode child;
                child.gamma0 = node.gamma0 + k * psharp;
                child.stage = q;
                child.parent = static_cast<int64_t>(i);
                child.lift_k = k;
                child.kind = node.kind == OccKind::exact_instance
                                 ? OccKind::exact_instance
                                 : classify_kind(s, child.gamma0, sieve_primes);
                next.nodes.push_back(std::move(child));
            }
        }

        std::sort(next.nodes.begin(), next.nodes.end(),
                  [](const InstanceNode& a, const InstanceNode& b) { return a.gamma0 < b.gamma0; });
        if (static_cast<int64_t>(next.nodes.size()) > opts.max_width) {
            next.nodes.resize(static_cast<size_t>(opts.max_width));
            next.truncated = true;
            result.truncated = true;
        }
        if (opts.progress)
            std::cerr << "stage " << q << ": " << next.nodes.size() << " nodes"
                      << (next.truncated ? " (truncated)" : "") << "\n";
        if (log.is_open()) log_stage(log, next);

        result.stages.push_back(std::move(next));
        psharp *= q;
        p = q;
    }
}

BfsLog read_bfs_log(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw input_error("cannot open bfs log " + path);
    std::string header;
    if (!std::getline(is, header) || header.rfind("# bfs gaps=", 0) != 0)
        throw input_error("bfs log: missing header");

    size_t seed_pos = header.find(" seed=");
    size_t at_pos = header.find('@', seed_pos);
    if (seed_pos == std::string::npos || at_pos == std::string::npos)
        throw input_error("bfs log: bad header");

    BfsLog out;
    out.s = parse_gap_list(header.substr(11, seed_pos - 11));
    mpz_class seed_gamma(header.substr(seed_pos + 6, at_pos - seed_pos - 6));
    int64_t seed_stage = std::stoll(header.substr(at_pos + 1));

    std::vector<mpz_class> primorials{primorial(seed_stage)};  // of stages[i]
    int64_t stage, parent, k;
    char kind;
    while (is >> stage >> parent >> k >> kind) {
        if (out.result.stages.empty()) {
            if (stage != seed_stage || parent != -1)
                throw input_error("bfs log: bad seed record");
            BfsStage st;
            st.stage = stage;
            InstanceNode n;
            n.gamma0 = seed_gamma;
            n.stage = stage;
            n.kind = kind_from_char(kind);
            st.nodes.push_back(n);
            out.result.stages.push_back(std::move(st));
            continue;
        }
        if (stage != out.result.stages.back().stage) {
            int64_t expect = next_prime_after(out.result.stages.back().stage);
            if (stage != expect) throw input_error("bfs log: stage out of order");
            primorials.push_back(primorials.back() * stage);
            BfsStage st;
            st.stage = stage;
            out.result.stages.push_back(std::move(st));
        }
        BfsStage& cur = out.result.stages.back();
        const BfsStage& prev = out.result.stages[out.result.stages.size() - 2];
        if (parent < 0 || parent >= static_cast<int64_t>(prev.nodes.size()))
            throw input_error("bfs log: parent index out of range");
        InstanceNode n;
        n.gamma0 = prev.nodes[static_cast<size_t>(parent)].gamma0 +
                   k * primorials[out.result.stages.size() - 2];
        n.stage = stage;
        n.parent = parent;
        n.lift_k = k;
        n.kind = kind_from_char(kind);
        cur.nodes.push_back(std::move(n));
    }
    if (out.result.stages.empty()) throw input_error("bfs log: no records");
    return out;
}

UniquePrefix unique_prefix(const Constellation& s, const mpz_class& seed_gamma0,
                           int64_t seed_stage) {
    if (seed_stage < 2 || next_prime_after(seed_stage - 1) != seed_stage)
        throw input_error("seed stage must be prime");
    if (seed_gamma0 < 1 || seed_gamma0 >= primorial(seed_stage))
        throw input_error("seed gamma0 out of range [1, stage#)");
    if (!survives_all_primes(s, seed_gamma0, seed_stage))
        throw input_error("seed is not a surviving image at its stage");
    // The seed survives, so rho > 0 below the stage; uniqueness is then
    // rho(q) = 1 for every prime q <= stage (the CRT count).
    PrimeTable pt(seed_stage);
    for (int64_t q : pt.primes())
        if (rho(s, q) != 1)
            throw input_error("seed is not the unique occurrence at its stage");

    UniquePrefix out;
    out.coords.base_prime = seed_stage;
    out.coords.c0 = seed_gamma0;

    mpz_class gamma = seed_gamma0;
    mpz_class psharp = primorial(seed_stage);
    int64_t p = seed_stage;
    for (;;) {
        int64_t q = next_prime_after(p);
        int64_t r = rho(s, q);
        if (r == 0) {
            out.terminal_stage = q;
            out.extinct = true;
            break;
        }
        if (r >= 2) {
            out.terminal_stage = q;
            break;
        }
        std::vector<char> allowed = allowed_residues(s, q);
        int64_t m = static_cast<int64_t>(mpz_fdiv_ui(psharp.get_mpz_t(), static_cast<unsigned long>(q)));
        int64_t g = static_cast<int64_t>(mpz_fdiv_ui(gamma.get_mpz_t(), static_cast<unsigned long>(q)));
        int64_t k = -1;
        for (int64_t cand = 0; cand < q; ++cand) {
            if (allowed[(g + cand * m % q) % q]) {
                k = cand;
                break;
            }
        }
        if (k < 0) throw input_error("internal: no lift found despite rho = 1");
        out.coords.coeffs.push_back(k);
        gamma += k * psharp;
        psharp *= q;
        p = q;
    }
    return out;
}

MinExact min_exact_instance(const BfsResult& result) {
    MinExact out;
    if (result.stages.empty()) return out;
    const BfsStage& last = result.stages.back();
    out.stage = last.stage;
    out.lower_bound_only = result.truncated;
    for (const auto& n : last.nodes) {  // nodes are sorted by gamma0
        if (n.kind == OccKind::exact_instance) {
            out.gamma0 = n.gamma0;
            break;
        }
    }
    return out;
}

}  // namespace constel
