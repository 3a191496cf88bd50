#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <ramlab/asfield.hpp>
#include <ramlab/breakcalc.hpp>
#include <ramlab/fpflag.hpp>
#include <ramlab/padic.hpp>

namespace py = pybind11;
using namespace ramlab;

namespace {

py::object to_py_int(const Int& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Int from_py_int(const py::object& o) { return Int(py::str(o).cast<std::string>()); }

py::list int_list(const std::vector<Int>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py_int(x));
    return out;
}

using PyTerms = std::vector<std::pair<int, std::vector<int>>>;

LaurentSeries make_series(const std::shared_ptr<const FqField>& k, const PyTerms& terms,
                          int precision) {
    std::vector<std::pair<int, FqElem>> t;
    t.reserve(terms.size());
    for (const auto& [e, c] : terms) t.emplace_back(e, k->element(c));
    return LaurentSeries::from_terms(k, t, precision);
}

std::shared_ptr<const FqField> make_field(long p, long f,
                                          const std::optional<std::vector<int>>& modulus) {
    return modulus ? FqField::make(p, *modulus) : FqField::make(p, f);
}

py::dict report_dict(const RamificationReport& r) {
    py::dict d;
    d["unramified"] = r.has_unramified_part;
    d["upper"] = r.upper_breaks;
    d["dims"] = r.step_dims;
    d["lower"] = int_list(r.lower_breaks);
    d["inertia_order"] = to_py_int(r.inertia_order);
    d["degree"] = to_py_int(r.degree);
    d["different"] = to_py_int(r.different_valuation);
    d["residual_degree"] = r.residual_degree;
    d["discriminant"] = to_py_int(r.discriminant_valuation);
    return d;
}

py::dict as_report_dict(const ASExtensionReport& r) {
    py::dict d;
    d["generator_count"] = r.generator_count;
    d["dimension"] = r.dimension;
    d["unramified"] = r.has_unramified_part;
    py::list steps;
    for (const auto& s : r.steps) steps.append(py::make_tuple(s.upper, s.dim));
    d["steps"] = steps;
    d["lower"] = int_list(r.lower_breaks);
    d["degree"] = to_py_int(r.degree);
    d["different"] = to_py_int(r.different_valuation);
    d["residual_degree"] = r.residual_degree;
    d["discriminant"] = to_py_int(r.discriminant_valuation);
    return d;
}

py::dict class_dict(const ASClass& c) {
    py::dict d;
    d["kind"] = std::string(to_string(c.kind));
    d["level"] = c.level;
    d["trace_part"] = c.trace_part;
    py::dict poles;
    for (const auto& [m, coef] : c.poles) poles[py::int_(-m)] = coef.coeffs();
    d["poles"] = poles;
    PyTerms terms;
    for (const auto& [e, coef] : c.representative().terms())
        terms.emplace_back(e, coef.coeffs());
    d["terms"] = terms;
    return d;
}

py::dict norm_report_dict(const NormCheckReport& r) {
    py::dict d;
    d["trials"] = r.trials;
    d["passes"] = r.passes;
    d["ok"] = r.ok();
    d["residues"] = int_list(r.residues);
    return d;
}

std::vector<BreakStep> make_steps(const std::vector<std::pair<long, long>>& steps) {
    std::vector<BreakStep> out;
    out.reserve(steps.size());
    for (const auto& [u, d] : steps) out.push_back({u, d});
    return out;
}

}  // namespace

PYBIND11_MODULE(_ramlab, m) {
    m.doc() = "ramification data for elementary abelian p-extensions of local fields";

    // breakcalc
    m.def("a_of", &a_of, py::arg("i"), py::arg("p"));
    m.def("c_of", &c_of, py::arg("m"), py::arg("p"));
    m.def(
        "upper_breaks",
        [](long p, long e1, long f) { return upper_breaks(FieldShape(p, e1, f)); },
        py::arg("p"), py::arg("e1"), py::arg("f"));
    m.def(
        "lower_breaks",
        [](long p, long e1, long f) {
            return int_list(lower_breaks(FieldShape(p, e1, f)));
        },
        py::arg("p"), py::arg("e1"), py::arg("f"));
    m.def(
        "maximal_report",
        [](long p, long e1, long f) {
            return report_dict(maximal_extension_report(FieldShape(p, e1, f)));
        },
        py::arg("p"), py::arg("e1"), py::arg("f"));
    m.def(
        "custom_report",
        [](long p, long e1, long f, const std::vector<std::pair<long, long>>& steps,
           bool unramified) {
            FieldShape shape(p, e1, f);
            return report_dict(custom_extension_report(
                shape, BreakProfile(shape, make_steps(steps), unramified)));
        },
        py::arg("p"), py::arg("e1"), py::arg("f"), py::arg("steps"),
        py::arg("unramified") = false);
    m.def(
        "fdpf_discriminant",
        [](long p, long e1, long f) {
            return to_py_int(fdpf_discriminant(FieldShape(p, e1, f)));
        },
        py::arg("p"), py::arg("e1"), py::arg("f"));
    m.def(
        "dim_upper_group",
        [](long p, long e1, long f, long n) {
            return dim_upper_group(FieldShape(p, e1, f), n);
        },
        py::arg("p"), py::arg("e1"), py::arg("f"), py::arg("n"));
    m.def(
        "dim_bar_u",
        [](long p, long e1, long f, long n) { return dim_bar_u(FieldShape(p, e1, f), n); },
        py::arg("p"), py::arg("e1"), py::arg("f"), py::arg("n"));
    m.def(
        "count_single_break",
        [](long p, long e1, long f, long u) {
            return to_py_int(count_single_break(FieldShape(p, e1, f), u));
        },
        py::arg("p"), py::arg("e1"), py::arg("f"), py::arg("u"));
    m.def(
        "extremal_discriminant",
        [](long p, long e1, long f, long mm, const std::string& mode) {
            const auto [v, witness] = extremal_discriminant(
                FieldShape(p, e1, f), mm,
                mode == "max" ? ExtremalMode::max : ExtremalMode::min);
            py::list steps;
            for (const auto& s : witness.steps())
                steps.append(py::make_tuple(s.upper, s.dim));
            return py::make_tuple(to_py_int(v), steps);
        },
        py::arg("p"), py::arg("e1"), py::arg("f"), py::arg("m"), py::arg("mode"));
    m.def(
        "cyclotomic_table",
        [](long p, long mm) {
            const auto t = cyclotomic_table(p, mm);
            py::dict d;
            d["p"] = t.p;
            d["m"] = t.m;
            d["trivial"] = t.trivial;
            d["g0"] = to_py_int(t.g0);
            d["herbrand_ok"] = t.herbrand_ok;
            d["disc"] = to_py_int(t.disc_valuation);
            d["kummer_break"] =
                t.kummer_break ? to_py_int(*t.kummer_break) : py::object(py::none());
            py::list rows;
            for (const auto& r : t.rows)
                rows.append(py::make_tuple(
                    to_py_int(r.from),
                    r.to < 0 ? py::object(py::none()) : to_py_int(r.to), r.upper_index,
                    to_py_int(r.order)));
            d["rows"] = rows;
            return d;
        },
        py::arg("p"), py::arg("m"));
    m.def(
        "classfield_table",
        [](long p, long f, long mm) {
            const auto t = classfield_example_table(p, f, mm);
            py::dict d;
            d["q"] = to_py_int(t.q);
            d["trivial"] = t.trivial;
            d["g0"] = to_py_int(t.g0);
            d["upper"] = t.upper_breaks;
            d["lower"] = int_list(t.lower_breaks);
            d["index_table"] = int_list(t.index_table);
            d["disc"] = to_py_int(t.disc_valuation);
            return d;
        },
        py::arg("p"), py::arg("f"), py::arg("m"));
    m.def(
        "nonkummerian_report",
        [](long p, long e, long f) {
            return report_dict(nonkummerian_maximal_report(p, e, f));
        },
        py::arg("p"), py::arg("e"), py::arg("f"));
    m.def("lambda_numberfield", &lambda_numberfield, py::arg("p"), py::arg("e"),
          py::arg("n"));
    m.def("lambda_funcfield", &lambda_funcfield, py::arg("p"), py::arg("n"));

    // asfield
    m.def(
        "as_reduce",
        [](long p, long f, const PyTerms& terms, int precision,
           const std::optional<std::vector<int>>& modulus) {
            const auto k = make_field(p, f, modulus);
            return class_dict(reduce_class(make_series(k, terms, precision)));
        },
        py::arg("p"), py::arg("f"), py::arg("terms"), py::arg("precision") = 1,
        py::arg("modulus") = py::none());
    m.def(
        "as_report",
        [](long p, long f, const std::vector<std::pair<PyTerms, int>>& generators,
           const std::optional<std::vector<int>>& modulus) {
            const auto k = make_field(p, f, modulus);
            std::vector<LaurentSeries> gens;
            gens.reserve(generators.size());
            for (const auto& [terms, prec] : generators)
                gens.push_back(make_series(k, terms, prec));
            return as_report_dict(extension_report(gens));
        },
        py::arg("p"), py::arg("f"), py::arg("generators"),
        py::arg("modulus") = py::none());
    m.def(
        "as_oracle",
        [](long p, long f, const PyTerms& terms, int precision, int pi_precision,
           const std::optional<std::vector<int>>& modulus) {
            const auto k = make_field(p, f, modulus);
            return verify_break_oracle(reduce_class(make_series(k, terms, precision)),
                                       pi_precision);
        },
        py::arg("p"), py::arg("f"), py::arg("terms"), py::arg("precision") = 1,
        py::arg("pi_precision") = 8, py::arg("modulus") = py::none());
    m.def(
        "solve_wp",
        [](long p, long f, const PyTerms& terms, int precision,
           const std::optional<std::vector<int>>& modulus) {
            const auto k = make_field(p, f, modulus);
            const auto x =
                solve_wp_in_maximal_ideal(make_series(k, terms, precision), precision);
            PyTerms out;
            for (const auto& [e, c] : x.terms()) out.emplace_back(e, c.coeffs());
            return out;
        },
        py::arg("p"), py::arg("f"), py::arg("terms"), py::arg("precision"),
        py::arg("modulus") = py::none());
    m.def("brute_dimension", &brute_dimension, py::arg("p"), py::arg("f"), py::arg("m"),
          py::arg("max_coords") = 4096);
    m.def(
        "fq_trace",
        [](long p, long f, const std::vector<int>& coeffs,
           const std::optional<std::vector<int>>& modulus) {
            return make_field(p, f, modulus)->element(coeffs).trace();
        },
        py::arg("p"), py::arg("f"), py::arg("coeffs"), py::arg("modulus") = py::none());
    m.def(
        "uniformiser_exponents",
        [](long mm, long p) { return uniformiser_exponents(mm, p); },
        py::arg("m"), py::arg("p"));

    // padic
    m.def(
        "absolute_norm",
        [](long p, long mm, int precision, const std::vector<py::object>& coeffs) {
            const auto ring = CycloRing::make(p, mm, precision);
            std::vector<Int> c;
            c.reserve(coeffs.size());
            for (const auto& o : coeffs) c.push_back(from_py_int(o));
            return to_py_int(absolute_norm(ring->element(c)).residue());
        },
        py::arg("p"), py::arg("m"), py::arg("precision"), py::arg("coeffs"));
    m.def(
        "val_pi",
        [](long p, long mm, int precision, const std::vector<py::object>& coeffs) {
            const auto ring = CycloRing::make(p, mm, precision);
            std::vector<Int> c;
            c.reserve(coeffs.size());
            for (const auto& o : coeffs) c.push_back(from_py_int(o));
            return val_pi(ring->element(c));
        },
        py::arg("p"), py::arg("m"), py::arg("precision"), py::arg("coeffs"));
    m.def(
        "cyclo_modulus",
        [](long p, long mm) {
            return int_list(CycloRing::make(p, mm, 1)->cyclo_modulus());
        },
        py::arg("p"), py::arg("m"));
    m.def(
        "random_p_primary_unit",
        [](long p, long mm, int precision, std::uint64_t seed) {
            return int_list(random_p_primary_unit(p, mm, precision, seed).coeffs());
        },
        py::arg("p"), py::arg("m"), py::arg("precision"), py::arg("seed"));
    m.def(
        "pisolkar_check",
        [](long p, long mm, long trials, int precision, std::uint64_t seed) {
            return norm_report_dict(pisolkar_check(p, mm, trials, precision, seed));
        },
        py::arg("p"), py::arg("m"), py::arg("trials"), py::arg("precision"),
        py::arg("seed"));
    m.def(
        "unit_norm_level_check",
        [](long p, long mm, long trials, int precision, std::uint64_t seed) {
            return norm_report_dict(
                unit_norm_level_check(p, mm, trials, precision, seed));
        },
        py::arg("p"), py::arg("m"), py::arg("trials"), py::arg("precision"),
        py::arg("seed"));

    // fpflag oracles
    m.def(
        "count_subspaces",
        [](long p, size_t ambient, size_t dim) {
            return to_py_int(count_subspaces(p, ambient, dim));
        },
        py::arg("p"), py::arg("ambient"), py::arg("dim"));
    m.def(
        "gaussian_binomial",
        [](long p, size_t ambient, size_t dim) {
            return to_py_int(gaussian_binomial(p, ambient, dim));
        },
        py::arg("p"), py::arg("ambient"), py::arg("dim"));
}
