// Python bindings. Big integers cross the boundary as Python ints (via
// decimal strings), exact rationals as fractions.Fraction, so no precision
// is lost on either side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "constel/admissibility.hpp"
#include "constel/bfs.hpp"
#include "constel/coords.hpp"
#include "constel/cycle.hpp"
#include "constel/errors.hpp"
#include "constel/ingest.hpp"
#include "constel/population.hpp"
#include "constel/primes.hpp"
#include "constel/scientific.hpp"
#include "constel/verify.hpp"

namespace py = pybind11;
using namespace constel;

namespace {

py::int_ py_from_mpz(const mpz_class& z) {
    PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

mpz_class mpz_from_py(const py::object& o) {
    if (!py::isinstance<py::int_>(o)) throw py::type_error("expected an int");
    return mpz_class(std::string(py::str(o)));
}

py::object py_fraction(const mpq_class& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py_from_mpz(q.get_num()), py_from_mpz(q.get_den()));
}

mpq_class mpq_from_py(const py::object& o) {
    if (py::isinstance<py::int_>(o)) return mpq_class(mpz_from_py(o));
    if (py::hasattr(o, "numerator") && py::hasattr(o, "denominator")) {
        mpq_class q(mpz_from_py(o.attr("numerator")), mpz_from_py(o.attr("denominator")));
        q.canonicalize();
        return q;
    }
    throw py::type_error("expected an int or a Fraction");
}

TupleFormat format_from_string(const std::string& name) {
    if (name == "offsets") return TupleFormat::offsets;
    if (name == "gaps") return TupleFormat::gaps;
    throw input_error("format must be 'offsets' or 'gaps'");
}

const char* role_name(Role r) {
    switch (r) {
        case Role::parent: return "parent";
        case Role::head: return "head";
        case Role::tail: return "tail";
    }
    return "?";
}

py::dict member_dict(const FamilyMember& m) {
    py::dict d;
    d["gaps"] = m.s.gaps();
    d["role"] = role_name(m.role);
    d["index"] = m.index;
    d["parent_index"] = m.parent_index;
    d["seed_gamma0"] = py_from_mpz(m.seed_gamma0);
    d["terminal_stage"] = m.terminal_stage;
    if (m.prefix_valid)
        d["prefix"] = coords_to_text(m.prefix);
    else
        d["prefix"] = py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "admissible prime constellations and the cycles of gaps of Eratosthenes sieve";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_MemoryError);

    py::class_<Constellation>(m, "Constellation")
        .def(py::init<std::vector<int64_t>>(), py::arg("gaps"))
        .def_property_readonly("gaps", &Constellation::gaps)
        .def_property_readonly("span", &Constellation::span)
        .def("__len__", &Constellation::length)
        .def("points", &Constellation::points)
        .def("reverse", &Constellation::reverse)
        .def("head_child", &Constellation::head_child)
        .def("tail_child", &Constellation::tail_child)
        .def("extend_left", &Constellation::extend_left, py::arg("gap"))
        .def("extend_right", &Constellation::extend_right, py::arg("gap"))
        .def("__eq__", [](const Constellation& a, const Constellation& b) { return a == b; })
        .def("__str__", &Constellation::str)
        .def("__repr__", [](const Constellation& s) {
            std::string out = "Constellation([";
            for (size_t i = 0; i < s.gaps().size(); ++i) {
                if (i) out += ", ";
                out += std::to_string(s.gaps()[i]);
            }
            return out + "])";
        });

    m.def("parse_gap_list", &parse_gap_list, py::arg("text"));

    m.def("nu", &nu, py::arg("s"), py::arg("m"),
          "distinct residues mod m covered by the points of s");
    m.def("rho", &rho, py::arg("s"), py::arg("m"),
          "free residue classes mod m: m - nu(s, m)");
    m.def("is_admissible", &is_admissible, py::arg("s"));
    m.def(
        "is_nonconvex",
        [](const Constellation& s) {
            PrimeTable pt(s.span() < 2 ? 2 : s.span());
            return is_nonconvex(s, pt);
        },
        py::arg("s"), "pi(span) < J");

    m.def("pi", [](int64_t x) {
        if (x < 0) throw input_error("pi: negative argument");
        PrimeTable pt(x < 2 ? 2 : x);
        return pt.pi(x);
    });
    m.def("next_prime_after", &next_prime_after, py::arg("n"));
    m.def("primorial", [](int64_t p) { return py_from_mpz(primorial(p)); }, py::arg("p"));
    m.def("phi_primorial", [](int64_t p) { return py_from_mpz(phi_primorial(p)); },
          py::arg("p"));

    py::class_<GapCycle>(m, "GapCycle")
        .def_readonly("p", &GapCycle::p)
        .def_readonly("gaps", &GapCycle::gaps)
        .def("period", &GapCycle::period)
        .def("__len__", [](const GapCycle& g) { return g.gaps.size(); })
        .def("__repr__", [](const GapCycle& g) {
            return "GapCycle(p=" + std::to_string(g.p) +
                   ", len=" + std::to_string(g.gaps.size()) + ")";
        });

    m.def("build_cycle", &build_cycle_bruteforce, py::arg("p"),
          py::arg("budget") = kDefaultCycleBudget,
          "sieve G(p#) directly; budget-limited");
    m.def("next_cycle", &next_cycle_by_recursion, py::arg("cycle"),
          py::arg("budget") = kDefaultCycleBudget,
          "G(p#) -> G(q#) by concatenate-and-fuse");

    py::class_<Occurrence>(m, "Occurrence")
        .def_readonly("gamma0", &Occurrence::gamma0)
        .def_readonly("interior_rough", &Occurrence::interior_rough)
        .def_property_readonly(
            "exact", [](const Occurrence& o) { return o.kind == OccKind::exact_instance; })
        .def("__repr__", [](const Occurrence& o) {
            return "Occurrence(gamma0=" + std::to_string(o.gamma0) +
                   (o.kind == OccKind::exact_instance ? ", exact" : ", driving") + ")";
        });

    m.def("find_occurrences", &find_occurrences, py::arg("cycle"), py::arg("s"));
    m.def(
        "crt_count",
        [](const Constellation& s, int64_t p) { return py_from_mpz(count_point_survivals_crt(s, p)); },
        py::arg("s"), py::arg("p"), "product of rho(s, q) over primes q <= p");

    py::class_<InOutCount>(m, "InOutCount")
        .def_readonly("n_in", &InOutCount::n_in)
        .def_readonly("n_out", &InOutCount::n_out)
        .def("__repr__", [](const InOutCount& c) {
            return "InOutCount(n_out=" + std::to_string(c.n_out) +
                   ", n_in=" + std::to_string(c.n_in) + ")";
        });

    m.def("count_in_out", &count_in_out, py::arg("cycle"), py::arg("child"), py::arg("parent"));

    py::class_<PrimorialCoords>(m, "PrimorialCoords")
        .def(py::init([](int64_t base_prime, const py::object& c0, std::vector<int64_t> coeffs) {
                 PrimorialCoords c;
                 c.base_prime = base_prime;
                 c.c0 = mpz_from_py(c0);
                 c.coeffs = std::move(coeffs);
                 return c;
             }),
             py::arg("base_prime"), py::arg("c0"), py::arg("coeffs") = std::vector<int64_t>{})
        .def_readonly("base_prime", &PrimorialCoords::base_prime)
        .def_property_readonly("c0",
                               [](const PrimorialCoords& c) { return py_from_mpz(c.c0); })
        .def_readonly("coeffs", &PrimorialCoords::coeffs)
        .def("__repr__",
             [](const PrimorialCoords& c) { return "PrimorialCoords('" + coords_to_text(c) + "')"; });

    m.def(
        "encode",
        [](const py::object& x, int64_t base_prime) { return encode(mpz_from_py(x), base_prime); },
        py::arg("x"), py::arg("base_prime") = 11);
    m.def(
        "decode", [](const PrimorialCoords& c) { return py_from_mpz(decode(c)); },
        py::arg("coords"));
    m.def("coords_to_text", &coords_to_text, py::arg("coords"));
    m.def("coords_from_text", &coords_from_text, py::arg("text"),
          py::arg("default_base_prime") = 11);

    m.def(
        "unique_prefix",
        [](const Constellation& s, const py::object& seed_gamma0, int64_t seed_stage) {
            UniquePrefix up = unique_prefix(s, mpz_from_py(seed_gamma0), seed_stage);
            py::dict d;
            d["coords"] = up.coords;
            d["terminal_stage"] = up.terminal_stage;
            d["extinct"] = up.extinct;
            return d;
        },
        py::arg("s"), py::arg("seed_gamma0"), py::arg("seed_stage"),
        "follow the single-image chain upward until rho != 1");

    m.def(
        "bfs_widths",
        [](const Constellation& s, const py::object& seed_gamma0, int64_t seed_stage,
           int64_t up_to_prime, int64_t max_width) {
            BfsOptions opts;
            opts.max_width = max_width;
            BfsResult r =
                bfs_instances(s, mpz_from_py(seed_gamma0), seed_stage, up_to_prime, opts);
            std::vector<py::tuple> out;
            for (const auto& st : r.stages) {
                int64_t exact = 0;
                for (const auto& n : st.nodes)
                    if (n.kind == OccKind::exact_instance) ++exact;
                out.push_back(py::make_tuple(st.stage, st.nodes.size(), exact, st.truncated));
            }
            return out;
        },
        py::arg("s"), py::arg("seed_gamma0"), py::arg("seed_stage"), py::arg("up_to_prime"),
        py::arg("max_width") = 1000000,
        "per-stage (stage, nodes, exact, truncated) summary of the instance search");

    m.def(
        "min_exact_instance",
        [](const Constellation& s, const py::object& seed_gamma0, int64_t seed_stage,
           int64_t up_to_prime, int64_t max_width) {
            BfsOptions opts;
            opts.max_width = max_width;
            BfsResult r =
                bfs_instances(s, mpz_from_py(seed_gamma0), seed_stage, up_to_prime, opts);
            MinExact me = min_exact_instance(r);
            py::dict d;
            d["gamma0"] = me.gamma0 ? py::object(py_from_mpz(*me.gamma0)) : py::object(py::none());
            d["stage"] = me.stage;
            d["lower_bound_only"] = me.lower_bound_only;
            return d;
        },
        py::arg("s"), py::arg("seed_gamma0"), py::arg("seed_stage"), py::arg("up_to_prime"),
        py::arg("max_width") = 1000000);

    m.def(
        "rho_profile",
        [](const Constellation& s, int64_t lo, int64_t hi) { return rho_profile(s, lo, hi).values; },
        py::arg("s"), py::arg("lo"), py::arg("hi"));

    m.def(
        "population",
        [](const Constellation& s, int64_t P, int64_t P0) { return py_from_mpz(population(s, P, P0)); },
        py::arg("s"), py::arg("P"), py::arg("P0"),
        "product of rho(s, q) over primes P0 < q <= P");

    m.def(
        "winf",
        [](const Constellation& s) {
            WinfResult w = winf(s);
            py::dict d;
            d["admissible"] = w.admissible;
            d["factor_small"] = py_from_mpz(w.factor_small);
            d["factor_large"] = py_fraction(w.factor_large);
            d["w"] = py_fraction(w.w);
            return d;
        },
        py::arg("s"), "asymptotic relative population");

    m.def(
        "inout_trajectory",
        [](const Constellation& child, const Constellation& parent, int64_t stage,
           const py::object& n_out, const py::object& n_in, int64_t end_prime) {
            InOutState init;
            init.stage = stage;
            init.n_out = mpz_from_py(n_out);
            init.n_in = mpz_from_py(n_in);
            std::vector<py::tuple> out;
            for (const InOutState& st : inout_trajectory(child, parent, init, end_prime))
                out.push_back(py::make_tuple(st.stage, py_from_mpz(st.n_out), py_from_mpz(st.n_in)));
            return out;
        },
        py::arg("child"), py::arg("parent"), py::arg("stage"), py::arg("n_out"),
        py::arg("n_in"), py::arg("end_prime"),
        "(stage, n_out, n_in) series of the population recurrence");

    m.def("first_escape_prime", &first_escape_prime, py::arg("child"), py::arg("parent"));
    m.def("delta_count", &delta_count, py::arg("child"), py::arg("parent"), py::arg("lo"),
          py::arg("hi"));

    m.def(
        "to_scientific",
        [](const py::object& v, int digits) { return to_scientific(mpq_from_py(v), digits); },
        py::arg("value"), py::arg("significant_digits"),
        "exact half-to-even rendering of an int or Fraction");
    m.def(
        "from_scientific",
        [](const std::string& text) { return py_fraction(mpq_from_scientific(text)); },
        py::arg("text"));

    m.def(
        "load_tuples",
        [](const std::string& path, const std::string& format) {
            std::vector<Constellation> out;
            for (const TupleRecord& r : parse_tuples_file(path, format_from_string(format)).records)
                out.push_back(r.s);
            return out;
        },
        py::arg("path"), py::arg("format") = "offsets");

    m.def(
        "family_index",
        [](const std::vector<Constellation>& parents, int64_t count, int64_t length,
           int64_t span, int64_t base_prime) {
            TupleFile f;
            for (size_t i = 0; i < parents.size(); ++i)
                f.records.push_back({parents[i], static_cast<int64_t>(i + 1)});
            FamilyOptions opts;
            opts.expected_count = count;
            opts.expected_length = length;
            opts.expected_span = span;
            opts.base_prime = base_prime;
            FamilyIndex fam = build_family_index(f, opts);
            py::dict d;
            py::list ps, cs;
            for (const auto& p : fam.parents) ps.append(member_dict(p));
            for (const auto& c : fam.children) cs.append(member_dict(c));
            d["parents"] = ps;
            d["children"] = cs;
            return d;
        },
        py::arg("parents"), py::arg("count") = 58, py::arg("length") = 459,
        py::arg("span") = 3242, py::arg("base_prime") = 11,
        "order a reversal-closed parent set and derive its head/tail children");

    m.def(
        "verify",
        [](int64_t max_stage, int patterns, int pairs) {
            VerifyOptions opts;
            opts.max_stage = max_stage;
            opts.random_constellations = patterns;
            opts.random_pairs = pairs;
            VerifyReport rep = run_verification(opts);
            std::vector<py::tuple> items;
            for (const auto& it : rep.items)
                items.push_back(py::make_tuple(it.name, it.ok, it.detail));
            return py::make_tuple(rep.all_ok(), items);
        },
        py::arg("max_stage") = 13, py::arg("patterns") = 40, py::arg("pairs") = 6,
        "small-instance oracle suite; returns (all_ok, [(name, ok, detail)])");
}
