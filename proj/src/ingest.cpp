#include "constel/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "constel/admissibility.hpp"
#include "constel/bfs.hpp"
#include "constel/errors.hpp"
#include "constel/primes.hpp"

namespace constel {

namespace {

std::vector<int64_t> split_ints(const std::string& line, int64_t lineno) {
    std::string t = line;
    for (char& c : t)
        if (c == ',') c = ' ';
    std::istringstream is(t);
    std::vector<int64_t> vals;
    int64_t v;
    while (is >> v) vals.push_back(v);
    if (!is.eof())
        throw input_error("line " + std::to_string(lineno) + ": unparseable token");
    return vals;
}

Constellation record_from_offsets(const std::vector<int64_t>& offs, int64_t lineno) {
    if (offs.front() != 0)
        throw input_error("line " + std::to_string(lineno) + ": offsets must start at 0");
    std::vector<int64_t> gaps;
    gaps.reserve(offs.size() - 1);
    for (size_t i = 1; i < offs.size(); ++i) {
        int64_t d = offs[i] - offs[i - 1];
        if (d <= 0)
            throw input_error("line " + std::to_string(lineno) +
                              ": offsets must be strictly increasing");
        if (d % 2 != 0)
            throw input_error("line " + std::to_string(lineno) + ": odd gap " +
                              std::to_string(d));
        gaps.push_back(d);
    }
    return Constellation(std::move(gaps));
}

Constellation record_from_gaps(const std::vector<int64_t>& gaps, int64_t lineno) {
    try {
        return Constellation(gaps);
    } catch (const input_error& e) {
        throw input_error("line " + std::to_string(lineno) + ": " + e.what());
    }
}

}  // namespace

TupleFile parse_tuples(std::istream& is, TupleFormat format) {
    TupleFile out;
    std::string line;
    int64_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<int64_t> vals = split_ints(line, lineno);
        if (vals.empty()) continue;
        TupleRecord rec;
        rec.line = lineno;
        rec.s = format == TupleFormat::offsets ? record_from_offsets(vals, lineno)
                                               : record_from_gaps(vals, lineno);
        out.records.push_back(std::move(rec));
    }
    return out;
}

TupleFile parse_tuples_file(const std::string& path, TupleFormat format) {
    std::ifstream is(path);
    if (!is) throw input_error("cannot open " + path);
    return parse_tuples(is, format);
}

void write_tuples(std::ostream& os, const TupleFile& tuples, TupleFormat format) {
    for (const auto& rec : tuples.records) {
        if (format == TupleFormat::gaps) {
            os << rec.s.str() << "\n";
        } else {
            const auto pts = rec.s.points();
            for (size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << pts[i];
            os << "\n";
        }
    }
}

TupleFile fixtures() {
    const std::vector<std::vector<int64_t>> patterns = {
        {2},       {2, 4},       {4, 2},       {2, 4, 2},    {6},
        {2, 6, 4}, {6, 4, 2},    {2, 4, 6, 2}, {2, 6, 4, 2},
        {2, 2},  // inadmissible, for negative tests; keep last
    };
    TupleFile out;
    int64_t line = 0;
    for (const auto& gaps : patterns) {
        TupleRecord rec;
        rec.line = ++line;
        rec.s = Constellation(gaps);
        out.records.push_back(std::move(rec));
    }
    return out;
}

// ------------------------------------------------------------- family ----

namespace {

// Numeric comparison of two unique prefixes sharing a base prime: compare
// the decoded values truncated to the common digit count, then prefer the
// shorter prefix, then the gap sequence (a tie-break that only degenerate
// toy families can reach).
bool prefix_less(const FamilyMember& a, const FamilyMember& b) {
    if (a.seed_gamma0 != b.seed_gamma0) return a.seed_gamma0 < b.seed_gamma0;
    size_t common = std::min(a.prefix.coeffs.size(), b.prefix.coeffs.size());
    PrimorialCoords pa = a.prefix, pb = b.prefix;
    pa.coeffs.resize(common);
    pb.coeffs.resize(common);
    mpz_class va = decode(pa), vb = decode(pb);
    if (va != vb) return va < vb;
    if (a.prefix.coeffs.size() != b.prefix.coeffs.size())
        return a.prefix.coeffs.size() < b.prefix.coeffs.size();
    return a.s.gaps() < b.s.gaps();
}

const char* role_name(Role r) {
    switch (r) {
        case Role::parent: return "parent";
        case Role::head: return "head";
        default: return "tail";
    }
}

}  // namespace

FamilyIndex build_family_index(const TupleFile& parents, const FamilyOptions& opts) {
    if (static_cast<int64_t>(parents.records.size()) != opts.expected_count)
        throw input_error("family: expected " + std::to_string(opts.expected_count) +
                          " parents, got " + std::to_string(parents.records.size()));

    GapCycle base = build_cycle_bruteforce(opts.base_prime, opts.cycle_budget);

    FamilyIndex fam;
    for (const auto& rec : parents.records) {
        const Constellation& s = rec.s;
        if (s.length() != opts.expected_length)
            throw input_error("family: parent on line " + std::to_string(rec.line) +
                              " has " + std::to_string(s.length()) + " gaps, expected " +
                              std::to_string(opts.expected_length));
        if (s.span() != opts.expected_span)
            throw input_error("family: parent on line " + std::to_string(rec.line) +
                              " has span " + std::to_string(s.span()) + ", expected " +
                              std::to_string(opts.expected_span));
        if (s.gaps().front() != 2 || s.gaps().back() != 2)
            throw input_error("family: parent on line " + std::to_string(rec.line) +
                              " must begin and end with gap 2");
        if (!is_admissible(s))
            throw input_error("family: parent on line " + std::to_string(rec.line) +
                              " is not admissible");

        auto occ = find_occurrences(base, s);
        if (occ.empty())
            throw input_error("family: parent on line " + std::to_string(rec.line) +
                              " has no image in G(" + std::to_string(opts.base_prime) + "#)");
        if (occ.size() > 1)
            throw input_error("family: parent on line " + std::to_string(rec.line) +
                              " is not unique in G(" + std::to_string(opts.base_prime) + "#)");

        FamilyMember m;
        m.s = s;
        m.role = Role::parent;
        m.seed_gamma0 = occ.front().gamma0;
        auto up = unique_prefix(s, m.seed_gamma0, opts.base_prime);
        m.prefix = up.coords;
        m.terminal_stage = up.terminal_stage;
        m.prefix_valid = true;
        fam.parents.push_back(std::move(m));
    }

    // Reversal closure, then order parents by (seed residue, prefix value).
    {
        std::vector<std::vector<int64_t>> all, rev;
        for (const auto& m : fam.parents) {
            all.push_back(m.s.gaps());
            rev.push_back(m.s.reverse().gaps());
        }
        std::sort(all.begin(), all.end());
        std::sort(rev.begin(), rev.end());
        if (all != rev) throw input_error("family: parent set is not closed under reversal");
    }
    std::sort(fam.parents.begin(), fam.parents.end(), prefix_less);
    for (size_t i = 0; i < fam.parents.size(); ++i) {
        fam.parents[i].index = static_cast<int64_t>(i);
        fam.parents[i].parent_index = static_cast<int64_t>(i);
    }

    // Children, per seed block: the heads of the block's parents in order,
    // then their tails. Heads share the parent's seed; tails start one gap 2
    // later.
    PrimeTable pt(opts.base_prime);
    mpz_class period = primorial(opts.base_prime);
    size_t i = 0;
    int64_t child_index = 0;
    while (i < fam.parents.size()) {
        size_t j = i;
        while (j < fam.parents.size() && fam.parents[j].seed_gamma0 == fam.parents[i].seed_gamma0)
            ++j;
        for (int pass = 0; pass < 2; ++pass) {
            for (size_t k = i; k < j; ++k) {
                const FamilyMember& par = fam.parents[k];
                FamilyMember c;
                c.role = pass == 0 ? Role::head : Role::tail;
                c.s = pass == 0 ? par.s.head_child() : par.s.tail_child();
                c.seed_gamma0 = pass == 0 ? par.seed_gamma0
                                          : par.seed_gamma0 + par.s.gaps().front();
                // tail seeds can cross the end of the base cycle's period
                if (c.seed_gamma0 >= period) c.seed_gamma0 -= period;
                c.index = child_index++;
                c.parent_index = par.index;
                bool unique = true;
                for (int64_t q : pt.primes())
                    if (rho(c.s, q) != 1) unique = false;
                if (unique) {
                    auto up = unique_prefix(c.s, c.seed_gamma0, opts.base_prime);
                    c.prefix = up.coords;
                    c.terminal_stage = up.terminal_stage;
                    c.prefix_valid = true;
                }
                fam.children.push_back(std::move(c));
            }
        }
        i = j;
    }
    return fam;
}

void write_family_jsonl(std::ostream& os, const FamilyIndex& family) {
    auto emit = [&os](const FamilyMember& m) {
        os << "{\"index\":" << m.index << ",\"role\":\"" << role_name(m.role)
           << "\",\"gaps\":[";
        const auto& gaps = m.s.gaps();
        for (size_t i = 0; i < gaps.size(); ++i) os << (i ? "," : "") << gaps[i];
        os << "],\"span\":" << m.s.span() << ",\"J\":" << m.s.length() << "}\n";
    };
    for (const auto& m : family.parents) emit(m);
    for (const auto& m : family.children) emit(m);
}

}  // namespace constel
