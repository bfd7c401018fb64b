// constel: command-line surface over the constellation / sieve-cycle library.
//
// Exit codes: 0 success, 1 input error, 2 verification failure, 3 memory
// budget exceeded.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "constel/admissibility.hpp"
#include "constel/bfs.hpp"
#include "constel/constellation.hpp"
#include "constel/coords.hpp"
#include "constel/cycle.hpp"
#include "constel/errors.hpp"
#include "constel/ingest.hpp"
#include "constel/population.hpp"
#include "constel/primes.hpp"
#include "constel/scientific.hpp"
#include "constel/verify.hpp"

namespace {

using namespace constel;

// Shared input selection: either a tuple file (or the literal 'fixtures'),
// or a named family built from a parent file.
struct SourceOpts {
    std::string input;
    std::string format;
    std::string family;
    std::string parents_path;
    std::string members = "children";
    int64_t index = -1;
    int64_t base_prime = 11;
    uint64_t budget = kDefaultCycleBudget;
};

void add_source_opts(CLI::App* sub, SourceOpts& o, bool with_members) {
    sub->add_option("input", o.input, "tuple file, or 'fixtures' for the bundled patterns");
    sub->add_option("--format", o.format, "tuple file layout (required for file input)")
        ->check(CLI::IsMember({"offsets", "gaps"}));
    sub->add_option("--family", o.family, "build a named family instead of reading records")
        ->check(CLI::IsMember({"engelsma"}));
    sub->add_option("--parents", o.parents_path, "parent tuple file for --family");
    if (with_members)
        sub->add_option("--members", o.members,
                        "family members to select (default children)")
            ->check(CLI::IsMember({"parents", "children", "all"}));
    sub->add_option("--index", o.index,
                    "select a single member; output rows are numbered in selection order");
    sub->add_option("--base-prime", o.base_prime, "sieve stage of the seed cycle");
    sub->add_option("--budget", o.budget, "cycle memory budget in bytes");
}

TupleFile parse_with_format(const std::string& path, const std::string& format) {
    if (format.empty())
        throw input_error("declare the layout of " + path + " with --format offsets|gaps");
    return parse_tuples_file(path,
                             format == "gaps" ? TupleFormat::gaps : TupleFormat::offsets);
}

struct Selection {
    std::vector<Constellation> records;
    bool family_mode = false;
    std::vector<FamilyMember> picked;    // family mode, parallel to records
    std::vector<Constellation> parents;  // family mode, by parent index
};

Selection resolve_source(const SourceOpts& o) {
    Selection sel;
    if (!o.family.empty()) {
        if (!o.input.empty())
            throw input_error("give either an input file or --family, not both");
        if (o.parents_path.empty())
            throw input_error("--family needs --parents FILE");
        if (o.index >= 0 && o.members == "all")
            throw input_error("--index needs --members parents or children");
        FamilyOptions fo;
        fo.base_prime = o.base_prime;
        fo.cycle_budget = o.budget;
        FamilyIndex fam = build_family_index(parse_with_format(o.parents_path, o.format), fo);
        for (const auto& m : fam.parents) sel.parents.push_back(m.s);
        if (o.members == "parents" || o.members == "all")
            for (const auto& m : fam.parents)
                if (o.index < 0 || m.index == o.index) sel.picked.push_back(m);
        if (o.members == "children" || o.members == "all")
            for (const auto& m : fam.children)
                if (o.index < 0 || m.index == o.index) sel.picked.push_back(m);
        if (sel.picked.empty())
            throw input_error("no family member with index " + std::to_string(o.index));
        for (const auto& m : sel.picked) sel.records.push_back(m.s);
        sel.family_mode = true;
        return sel;
    }
    if (o.input.empty())
        throw input_error("missing input: tuple file, 'fixtures', or --family");
    TupleFile t = o.input == "fixtures" ? fixtures() : parse_with_format(o.input, o.format);
    for (const auto& rec : t.records) sel.records.push_back(rec.s);
    if (o.index >= 0) {
        if (o.index >= static_cast<int64_t>(sel.records.size()))
            throw input_error("no record with index " + std::to_string(o.index));
        Constellation keep = sel.records[static_cast<size_t>(o.index)];
        sel.records = {keep};
    }
    return sel;
}

// Lazily opened --out target, defaulting to stdout.
class OutStream {
  public:
    std::ostream& get(const std::string& path) {
        if (path.empty()) return std::cout;
        file_.open(path);
        if (!file_) throw input_error("cannot open output file " + path);
        return file_;
    }

  private:
    std::ofstream file_;
};

std::pair<int64_t, int64_t> parse_prime_range(const std::string& spec) {
    size_t dots = spec.find("..");
    if (dots == std::string::npos)
        throw input_error("prime range must be LOW..HIGH, got '" + spec + "'");
    int64_t lo, hi;
    try {
        lo = std::stoll(spec.substr(0, dots));
        hi = std::stoll(spec.substr(dots + 2));
    } catch (const std::exception&) {
        throw input_error("prime range must be LOW..HIGH, got '" + spec + "'");
    }
    if (lo < 2 || hi < lo)
        throw input_error("prime range needs 2 <= LOW <= HIGH");
    return {lo, hi};
}

mpz_class parse_bigint(const std::string& text, const std::string& what) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw input_error(what + " is not an integer: '" + text + "'");
    }
}

// Build G(p#), sieving directly when the budget allows and otherwise
// recursing up from the largest stage that fits.
GapCycle build_cycle_auto(int64_t p, uint64_t budget, bool progress) {
    if (p < 2) throw input_error("cycle stage must be a prime >= 2");
    PrimeTable pt(p);
    if (!pt.is_prime(p))
        throw input_error("cycle stage " + std::to_string(p) + " is not prime");
    const auto& ps = pt.primes();
    GapCycle g;
    size_t k = ps.size();
    for (;;) {
        --k;
        try {
            g = build_cycle_bruteforce(ps[k], budget);
            break;
        } catch (const budget_error&) {
            if (k == 0) throw;
        }
    }
    if (progress && g.p != p)
        std::cerr << "sieved G(" << g.p << "#), recursing upward\n";
    while (g.p < p) {
        g = next_cycle_by_recursion(g, budget);
        if (progress)
            std::cerr << "G(" << g.p << "#): " << g.gaps.size() << " gaps\n";
    }
    return g;
}

void run_admissible(const SourceOpts& src, const std::string& out_path) {
    Selection sel = resolve_source(src);
    int64_t max_span = 2;
    for (const auto& s : sel.records) max_span = std::max(max_span, s.span());
    PrimeTable pt(max_span);
    OutStream out;
    std::ostream& os = out.get(out_path);
    os << "index,J,span,admissible,nonconvex,pi_span\n";
    for (size_t i = 0; i < sel.records.size(); ++i) {
        const Constellation& s = sel.records[i];
        os << i << "," << s.length() << "," << s.span() << ","
           << (is_admissible(s) ? "true" : "false") << ","
           << (is_nonconvex(s, pt) ? "true" : "false") << "," << pt.pi(s.span()) << "\n";
    }
}

void run_rho_table(const SourceOpts& src, const std::string& primes_spec,
                   const std::string& out_path) {
    auto [lo, hi] = parse_prime_range(primes_spec);
    Selection sel = resolve_source(src);
    std::vector<RhoProfile> rows;
    rows.reserve(sel.records.size());
    for (const auto& s : sel.records) rows.push_back(rho_profile(s, lo, hi));
    OutStream out;
    write_rho_table_csv(out.get(out_path), rows);
}

void run_winf(const SourceOpts& src, const std::string& out_path) {
    Selection sel = resolve_source(src);
    std::vector<WinfResult> rows;
    rows.reserve(sel.records.size());
    for (const auto& s : sel.records) rows.push_back(winf(s));
    OutStream out;
    write_winf_csv(out.get(out_path), rows);
}

void run_prefix(const SourceOpts& src, const std::string& seed_spec,
                const std::string& out_path) {
    Selection sel = resolve_source(src);
    std::vector<PrimorialCoords> csv_rows;

    auto emit = [&csv_rows](int64_t index, const PrimorialCoords& coords,
                            int64_t terminal, bool extinct) {
        std::cout << "index=" << index << " terminal=" << terminal;
        if (extinct) std::cout << " extinct=true";
        std::cout << " value=" << to_scientific(decode(coords), 8)
                  << " prefix=" << coords_to_text(coords) << "\n";
        csv_rows.push_back(coords);
    };

    if (sel.family_mode) {
        for (const auto& m : sel.picked) {
            if (!m.prefix_valid) {
                std::cout << "index=" << m.index << " prefix=none (not unique in the base cycle)\n";
                continue;
            }
            emit(m.index, m.prefix, m.terminal_stage, false);
        }
    } else {
        std::optional<GapCycle> base;  // built only for auto seeds
        int64_t seed_stage = 0;
        mpz_class seed_gamma0;
        const bool auto_seed = seed_spec == "auto";
        if (!auto_seed) {
            size_t colon = seed_spec.find(':');
            if (colon == std::string::npos)
                throw input_error("--seed must be 'auto' or STAGE:GAMMA0");
            try {
                seed_stage = std::stoll(seed_spec.substr(0, colon));
            } catch (const std::exception&) {
                throw input_error("--seed must be 'auto' or STAGE:GAMMA0");
            }
            seed_gamma0 = parse_bigint(seed_spec.substr(colon + 1), "seed gamma0");
        }
        for (size_t i = 0; i < sel.records.size(); ++i) {
            const Constellation& s = sel.records[i];
            int64_t stage = seed_stage;
            mpz_class gamma0 = seed_gamma0;
            if (auto_seed) {
                if (!base) base = build_cycle_bruteforce(src.base_prime, src.budget);
                auto occ = find_occurrences(*base, s);
                if (occ.size() != 1)
                    throw input_error("record " + std::to_string(i) + " (" + s.str() + "): " +
                                      std::to_string(occ.size()) + " occurrences in G(" +
                                      std::to_string(src.base_prime) +
                                      "#), need exactly one for a seed");
                stage = src.base_prime;
                gamma0 = occ.front().gamma0;
            }
            UniquePrefix up = unique_prefix(s, gamma0, stage);
            emit(static_cast<int64_t>(i), up.coords, up.terminal_stage, up.extinct);
        }
    }
    if (!out_path.empty()) {
        OutStream out;
        write_prefix_csv(out.get(out_path), csv_rows);
    }
}

struct InoutOpts {
    SourceOpts src;
    std::string child;
    std::string parent;
    int64_t start_prime = -1;
    std::string init;
    int64_t end = 0;
    std::string out_path;
    bool progress = false;
};

InOutState parse_init(const std::string& init, int64_t stage) {
    size_t comma = init.find(',');
    if (comma == std::string::npos)
        throw input_error("--init must be NOUT,NIN");
    InOutState st;
    st.stage = stage;
    st.n_out = parse_bigint(init.substr(0, comma), "initial n_out");
    st.n_in = parse_bigint(init.substr(comma + 1), "initial n_in");
    if (st.n_out < 0 || st.n_in < 0) throw input_error("--init counts must be nonnegative");
    return st;
}

void run_inout(const InoutOpts& o) {
    OutStream out;
    std::ostream& os = out.get(o.out_path);
    if (!o.src.family.empty()) {
        if (!o.child.empty() || !o.parent.empty())
            throw input_error("--family and --child/--parent are mutually exclusive");
        SourceOpts src = o.src;
        src.members = "children";
        Selection sel = resolve_source(src);
        // Default start is the last stage where each child's unique image
        // coincides with its parent's: one instance, inside.
        int64_t start = o.start_prime > 0 ? o.start_prime : 131;
        InOutState init = o.init.empty() ? InOutState{start, 0, 1} : parse_init(o.init, start);
        bool first = true;
        for (const auto& m : sel.picked) {
            const Constellation& parent = sel.parents.at(static_cast<size_t>(m.parent_index));
            auto series = inout_trajectory(m.s, parent, init, o.end);
            write_trajectory_csv(os, series, m.index, first);
            first = false;
            if (o.progress) std::cerr << "child " << m.index << " done\n";
        }
        return;
    }
    if (o.child.empty() || o.parent.empty())
        throw input_error("inout needs --child and --parent gap lists, or --family");
    Constellation child(parse_gap_list(o.child));
    Constellation parent(parse_gap_list(o.parent));
    int64_t start = o.start_prime > 0 ? o.start_prime : 3;
    InOutState init;
    if (o.init.empty()) {
        GapCycle g = build_cycle_auto(start, o.src.budget, o.progress);
        InOutCount counted = count_in_out(g, child, parent);
        init.stage = start;
        init.n_out = static_cast<long>(counted.n_out);
        init.n_in = static_cast<long>(counted.n_in);
    } else {
        init = parse_init(o.init, start);
    }
    write_trajectory_csv(os, inout_trajectory(child, parent, init, o.end));
}

struct CycleOpts {
    int64_t p = 0;
    bool verify = false;
    std::string out_path;
    uint64_t budget = kDefaultCycleBudget;
    bool progress = false;
};

int run_cycle(const CycleOpts& o) {
    if (!o.verify) {
        GapCycle g = build_cycle_auto(o.p, o.budget, o.progress);
        OutStream out;
        write_cycle(out.get(o.out_path), g);
        return 0;
    }
    // Verification mode sieves both stages directly, so the recursion is
    // checked against an independent construction.
    GapCycle g = build_cycle_bruteforce(o.p, o.budget);
    bool ok = check_cycle_shape(g);
    std::cout << "shape of G(" << o.p << "#): " << (ok ? "ok" : "FAIL") << "\n";
    if (o.p > 2) {
        int64_t prev = PrimeTable(o.p - 1).primes().back();
        GapCycle rec = next_cycle_by_recursion(build_cycle_bruteforce(prev, o.budget), o.budget);
        bool rec_ok = rec.p == g.p && rec.gaps == g.gaps;
        std::cout << "recursion G(" << prev << "#) -> G(" << o.p << "#): "
                  << (rec_ok ? "ok" : "FAIL") << "\n";
        ok = ok && rec_ok;
    }
    if (!o.out_path.empty()) {
        OutStream out;
        write_cycle(out.get(o.out_path), g);
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"admissible constellations and the cycles of gaps of Eratosthenes sieve"};
    app.set_version_flag("--version", "constel 0.1.0");
    app.require_subcommand(1);
    int rc = 0;

    SourceOpts adm_src;
    std::string adm_out;
    auto* adm = app.add_subcommand(
        "admissible", "per-record J, span, admissibility, nonconvexity, pi(span)");
    add_source_opts(adm, adm_src, true);
    adm->add_option("--out", adm_out, "write CSV here instead of stdout");
    adm->callback([&adm_src, &adm_out]() { run_admissible(adm_src, adm_out); });

    SourceOpts rho_src;
    std::string rho_primes, rho_out;
    auto* rho_cmd = app.add_subcommand("rho-table", "admissible residue counts per prime");
    add_source_opts(rho_cmd, rho_src, true);
    rho_cmd->add_option("--primes", rho_primes, "inclusive prime range LOW..HIGH")->required();
    rho_cmd->add_option("--out", rho_out, "write CSV here instead of stdout");
    rho_cmd->callback(
        [&rho_src, &rho_primes, &rho_out]() { run_rho_table(rho_src, rho_primes, rho_out); });

    SourceOpts winf_src;
    std::string winf_out;
    auto* winf_cmd = app.add_subcommand("winf", "asymptotic relative populations");
    add_source_opts(winf_cmd, winf_src, true);
    winf_cmd->add_option("--out", winf_out, "write CSV here instead of stdout");
    winf_cmd->callback([&winf_src, &winf_out]() { run_winf(winf_src, winf_out); });

    SourceOpts pfx_src;
    std::string pfx_seed = "auto", pfx_out;
    auto* pfx = app.add_subcommand("prefix", "unique primorial-coordinate prefixes");
    add_source_opts(pfx, pfx_src, true);
    pfx->add_option("--seed", pfx_seed,
                    "'auto' (unique image in the base cycle) or STAGE:GAMMA0");
    pfx->add_option("--out", pfx_out, "also write the coefficients as CSV");
    pfx->callback([&pfx_src, &pfx_seed, &pfx_out]() { run_prefix(pfx_src, pfx_seed, pfx_out); });

    InoutOpts io;
    auto* inout_cmd =
        app.add_subcommand("inout", "population trajectory outside/inside a parent");
    add_source_opts(inout_cmd, io.src, false);
    inout_cmd->add_option("--child", io.child, "child gap list, e.g. '2,4'");
    inout_cmd->add_option("--parent", io.parent, "parent gap list, e.g. '2,4,2'");
    inout_cmd->add_option("--start-prime", io.start_prime,
                          "initial stage (default 3, family default 131)");
    inout_cmd->add_option("--init", io.init,
                          "initial NOUT,NIN (default: sieve count, family default 0,1)");
    inout_cmd->add_option("--end", io.end, "final prime stage")->required();
    inout_cmd->add_option("--out", io.out_path, "write CSV here instead of stdout");
    inout_cmd->add_flag("--progress", io.progress, "stage markers on stderr");
    inout_cmd->callback([&io]() { run_inout(io); });

    CycleOpts cy;
    auto* cycle_cmd = app.add_subcommand("cycle", "dump or verify a cycle of gaps");
    cycle_cmd->add_option("p", cy.p, "sieve stage (prime)")->required();
    cycle_cmd->add_flag("--verify", cy.verify, "check shape and recursion instead of dumping");
    cycle_cmd->add_option("--out", cy.out_path, "write the dump here instead of stdout");
    cycle_cmd->add_option("--budget", cy.budget, "cycle memory budget in bytes");
    cycle_cmd->add_flag("--progress", cy.progress, "stage markers on stderr");
    cycle_cmd->callback([&cy, &rc]() { rc = run_cycle(cy); });

    VerifyOptions vo;
    auto* verify_cmd =
        app.add_subcommand("verify", "small-instance oracle suite (sieve vs. model)");
    verify_cmd->add_option("--max-stage", vo.max_stage, "deepest sieved stage (default 13)");
    verify_cmd->add_option("--random-patterns", vo.random_constellations,
                           "number of sampled patterns");
    verify_cmd->add_option("--random-pairs", vo.random_pairs, "number of sampled pairs");
    verify_cmd->add_flag("--progress", vo.progress, "per-check markers on stderr");
    verify_cmd->callback([&vo, &rc]() {
        VerifyReport report = run_verification(vo);
        write_report(std::cout, report);
        if (!report.all_ok()) rc = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const constel::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const constel::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
