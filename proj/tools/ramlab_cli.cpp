// ramlab: ramification data for elementary abelian p-extensions of local
// fields, Artin-Schreier class reduction over F_q((pi)), and p-adic norm
// congruence checks.  Every subcommand prints a human table by default and a
// canonical JSON object with --json (big integers as decimal strings).
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <ramlab/asfield.hpp>
#include <ramlab/breakcalc.hpp>
#include <ramlab/padic.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace ramlab;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_prime(long p) {
    if (!is_prime(p)) throw UsageError("p must be prime");
}

json int_str(const Int& v) { return v.str(); }

json int_list(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_str(x));
    return a;
}

std::string join_ints(const std::vector<Int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

// ---- field construction with the optional modulus-table override ----------

std::shared_ptr<const FqField> make_field(long p, long f) {
    const char* path = std::getenv("RAMLAB_MODULUS_TABLE");
    if (path != nullptr) {
        std::ifstream in(path);
        if (!in) throw UsageError(std::string("cannot open RAMLAB_MODULUS_TABLE file ") + path);
        json table = json::parse(in);
        const std::string key = std::to_string(p) + "," + std::to_string(f);
        if (table.contains(key)) {
            std::vector<int> mod = table.at(key).get<std::vector<int>>();
            return FqField::make(p, std::move(mod));
        }
    }
    return FqField::make(p, f);
}

// ---- series files ----------------------------------------------------------

LaurentSeries series_from_json(const json& j, const std::shared_ptr<const FqField>& k) {
    if (!j.is_object() || !j.contains("precision") || !j.contains("terms"))
        throw std::domain_error("series object needs \"precision\" and \"terms\"");
    const int prec = j.at("precision").get<int>();
    std::vector<std::pair<int, FqElem>> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw std::domain_error("each term must be [exponent, [coefficients]]");
        const int exp = t.at(0).get<int>();
        std::vector<int> coeffs = t.at(1).get<std::vector<int>>();
        if (static_cast<long>(coeffs.size()) > k->f())
            throw std::domain_error("coefficient vector longer than f");
        terms.emplace_back(exp, k->element(coeffs));
    }
    return LaurentSeries::from_terms(k, terms, prec);
}

json series_to_json(const LaurentSeries& s, int precision) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(json::array({e, c.coeffs()}));
    return json{{"precision", precision}, {"terms", terms}};
}

json load_series_file(const std::string& arg) {
    if (arg == "-") return json::parse(std::cin);
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open series file " + arg);
    return json::parse(in);
}

// ---- subcommand payloads ---------------------------------------------------

int run_breaks(long p, long e1, long f, bool as_json) {
    require_prime(p);
    FieldShape shape(p, e1, f);
    const auto report = maximal_extension_report(shape);
    const Int fdpf = fdpf_discriminant(shape);
    const bool fdpf_ok = fdpf == report.discriminant_valuation;

    if (as_json) {
        json upper = json::array();
        for (long u : report.upper_breaks) upper.push_back(u);
        json out{{"upper", upper},
                 {"lower", int_list(report.lower_breaks)},
                 {"different", int_str(report.different_valuation)},
                 {"discriminant", int_str(report.discriminant_valuation)},
                 {"fdpf_ok", fdpf_ok}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "maximal elementary abelian p-extension M|K for p=" << p
                  << " e1=" << e1 << " f=" << f << " (e=" << shape.e()
                  << ", q=" << shape.q() << ")\n";
        std::cout << "upper breaks : -1";
        for (long u : report.upper_breaks) std::cout << " " << u;
        std::cout << "\nlower breaks : -1 " << join_ints(report.lower_breaks) << "\n";
        std::cout << "inertia g0   : " << report.inertia_order << "\n";
        std::cout << "degree       : " << report.degree << "\n";
        std::cout << "different    : " << report.different_valuation << "\n";
        std::cout << "discriminant : " << report.discriminant_valuation << "\n";
        std::cout << "FDPF check   : " << (fdpf_ok ? "ok" : "MISMATCH") << " (" << fdpf
                  << ")\n";
    }
    return fdpf_ok ? 0 : 1;
}

std::vector<BreakStep> parse_breaks_arg(const std::string& arg) {
    std::vector<BreakStep> steps;
    std::istringstream is(arg);
    std::string item;
    while (std::getline(is, item, ',')) {
        const auto colon = item.find(':');
        try {
            if (colon == std::string::npos)
                steps.push_back({std::stol(item), 1});
            else
                steps.push_back({std::stol(item.substr(0, colon)),
                                 std::stol(item.substr(colon + 1))});
        } catch (const std::exception&) {
            throw UsageError("cannot parse break item '" + item + "', expected u:d");
        }
    }
    if (steps.empty()) throw UsageError("--breaks is empty");
    return steps;
}

int run_profile(long p, long e1, long f, const std::string& breaks_arg, bool unram,
                bool as_json) {
    require_prime(p);
    FieldShape shape(p, e1, f);
    BreakProfile profile(shape, parse_breaks_arg(breaks_arg), unram);
    const auto report = custom_extension_report(shape, profile);

    if (as_json) {
        json upper = json::array(), dims = json::array();
        for (size_t i = 0; i < report.upper_breaks.size(); ++i) {
            upper.push_back(report.upper_breaks[i]);
            dims.push_back(report.step_dims[i]);
        }
        json out{{"admissible", true},
                 {"unramified", report.has_unramified_part},
                 {"upper", upper},
                 {"dims", dims},
                 {"lower", int_list(report.lower_breaks)},
                 {"degree", int_str(report.degree)},
                 {"residual_degree", report.residual_degree},
                 {"different", int_str(report.different_valuation)},
                 {"discriminant", int_str(report.discriminant_valuation)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "admissible\n";
        std::cout << "degree       : " << report.degree << "\n";
        std::cout << "upper breaks :";
        if (report.has_unramified_part) std::cout << " -1";
        for (size_t i = 0; i < report.upper_breaks.size(); ++i)
            std::cout << " " << report.upper_breaks[i] << "(d=" << report.step_dims[i]
                      << ")";
        std::cout << "\nlower breaks :";
        if (report.has_unramified_part) std::cout << " -1";
        std::cout << " " << join_ints(report.lower_breaks) << "\n";
        std::cout << "different    : " << report.different_valuation << "\n";
        std::cout << "discriminant : " << report.discriminant_valuation << "\n";
    }
    return 0;
}

json class_to_json(const ASClass& cls) {
    json poles = json::object();
    for (const auto& [m, c] : cls.poles) poles[std::to_string(-m)] = c.coeffs();
    return json{{"kind", to_string(cls.kind)},
                {"level", cls.level},
                {"trace_part", cls.trace_part},
                {"poles", poles}};
}

int run_as(long p, long f, const std::string& series_arg, const std::string& mode,
           int pi_precision, bool as_json) {
    require_prime(p);
    auto field = make_field(p, f);
    const json input = load_series_file(series_arg);

    std::vector<LaurentSeries> gens;
    if (input.is_object() && input.contains("generators")) {
        for (const auto& g : input.at("generators"))
            gens.push_back(series_from_json(g, field));
    } else {
        gens.push_back(series_from_json(input, field));
    }
    if (gens.empty()) throw std::domain_error("no generators in series file");

    if (mode == "reduce") {
        if (gens.size() != 1)
            throw UsageError("--reduce expects a single series, not a generator list");
        const ASClass cls = reduce_class(gens[0]);
        if (as_json) {
            json out{{"class", class_to_json(cls)},
                     {"series", series_to_json(cls.representative(), 1)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "kind  : " << to_string(cls.kind) << "\n";
            std::cout << "level : " << cls.level << "\n";
            std::cout << "trace : " << cls.trace_part << "\n";
            std::cout << "poles :";
            for (const auto& [m, c] : cls.poles) {
                std::cout << " pi^" << -m << "*[";
                for (size_t i = 0; i < c.coeffs().size(); ++i)
                    std::cout << (i ? "," : "") << c.coeffs()[i];
                std::cout << "]";
            }
            std::cout << "\n";
        }
        return 0;
    }

    if (mode == "oracle") {
        if (gens.size() != 1) throw UsageError("--oracle expects a single series");
        const ASClass cls = reduce_class(gens[0]);
        const long measured = verify_break_oracle(cls, pi_precision);
        const bool ok = measured == cls.level + 1;
        if (as_json) {
            json out{{"level", cls.level},
                     {"measured", measured},
                     {"expected", cls.level + 1},
                     {"ok", ok}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "level " << cls.level << ", v_L(sigma(w) - w) = " << measured
                      << " (expected " << cls.level + 1 << ": "
                      << (ok ? "ok" : "MISMATCH") << ")\n";
        }
        return ok ? 0 : 1;
    }

    if (mode == "report") {
        const auto r = extension_report(gens);
        if (as_json) {
            json upper = json::array(), dims = json::array();
            for (const auto& s : r.steps) {
                upper.push_back(s.upper);
                dims.push_back(s.dim);
            }
            json out{{"generator_count", r.generator_count},
                     {"dimension", r.dimension},
                     {"unramified", r.has_unramified_part},
                     {"upper", upper},
                     {"dims", dims},
                     {"lower", int_list(r.lower_breaks)},
                     {"degree", int_str(r.degree)},
                     {"residual_degree", r.residual_degree},
                     {"different", int_str(r.different_valuation)},
                     {"discriminant", int_str(r.discriminant_valuation)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "generators   : " << r.generator_count << ", span dimension "
                      << r.dimension << "\n";
            std::cout << "degree       : " << r.degree << "\n";
            std::cout << "upper breaks :";
            if (r.has_unramified_part) std::cout << " -1";
            for (const auto& s : r.steps)
                std::cout << " " << s.upper << "(d=" << s.dim << ")";
            std::cout << "\nlower breaks :";
            if (r.has_unramified_part) std::cout << " -1";
            std::cout << " " << join_ints(r.lower_breaks) << "\n";
            std::cout << "different    : " << r.different_valuation << "\n";
            std::cout << "discriminant : " << r.discriminant_valuation << "\n";
        }
        return 0;
    }
    throw UsageError("unknown mode " + mode);
}

int run_norm(long p, long m, long trials, std::uint64_t seed, int precision,
             bool as_json) {
    require_prime(p);
    if (m < 1) throw UsageError("m must be >= 1");
    {
        long phi = p - 1;
        for (long i = 1; i < m && phi <= 16; ++i) phi *= p;
        if (phi > 16) throw UsageError("guard exceeded: phi(p^m) must be <= 16");
    }
    if (precision <= 0) precision = static_cast<int>(m) + 4;

    const auto pis = pisolkar_check(p, m, trials, precision, seed);
    const auto units = unit_norm_level_check(p, m, trials, precision, seed + 1);

    auto ring = CycloRing::make(p, m, precision);
    const Int none_minus_xi = absolute_norm(ring->one_minus_xi()).residue();
    const bool uniformiser_ok = none_minus_xi == p;

    bool gauss_ok = true;
    if (p == 2 && m == 2)
        gauss_ok = absolute_norm(ring->element({2, 1})).residue() == 5;

    const bool ok = pis.ok() && units.ok() && uniformiser_ok && gauss_ok;
    if (as_json) {
        json out{{"p", p},
                 {"m", m},
                 {"trials", trials},
                 {"seed", seed},
                 {"precision", precision},
                 {"pisolkar_passes", pis.passes},
                 {"unit_level_passes", units.passes},
                 {"norm_one_minus_xi", int_str(none_minus_xi)},
                 {"ok", ok}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "K = Q_p(xi) with p=" << p << ", m=" << m << ", precision p^"
                  << precision << "\n";
        std::cout << "N(alpha) = 1 mod p^" << m + 1 << " : " << pis.passes << "/"
                  << pis.trials << "\n";
        std::cout << "N(gamma) = 1 mod p^" << m << "  : " << units.passes << "/"
                  << units.trials << "\n";
        std::cout << "N(1 - xi) = p            : " << (uniformiser_ok ? "ok" : "FAIL")
                  << "\n";
        if (p == 2 && m == 2)
            std::cout << "N(2 + i) = 5             : " << (gauss_ok ? "ok" : "FAIL")
                      << "\n";
    }
    return ok ? 0 : 1;
}

int run_tables(const std::string& kind, long p, long e, long f, long m, bool as_json) {
    require_prime(p);
    if (kind == "cyclotomic") {
        const auto t = cyclotomic_table(p, m);
        if (as_json) {
            json rows = json::array();
            for (const auto& r : t.rows)
                rows.push_back(json{{"from", int_str(r.from)},
                                    {"to", r.to < 0 ? json(nullptr) : json(int_str(r.to))},
                                    {"w", r.upper_index},
                                    {"order", int_str(r.order)}});
            json out{{"kind", "cyclotomic"},
                     {"p", p},
                     {"m", m},
                     {"trivial", t.trivial},
                     {"g0", int_str(t.g0)},
                     {"rows", rows},
                     {"herbrand_ok", t.herbrand_ok},
                     {"disc", int_str(t.disc_valuation)},
                     {"kummer_break",
                      t.kummer_break ? json(int_str(*t.kummer_break)) : json(nullptr)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "Q_p(xi_m) | Q_p for p=" << p << ", m=" << m;
            if (t.trivial) std::cout << "  (trivial)";
            std::cout << "\n";
            for (const auto& r : t.rows) {
                std::cout << "  u in [" << r.from << ", ";
                if (r.to < 0)
                    std::cout << "oo";
                else
                    std::cout << r.to;
                std::cout << "[ : G_u = G^" << r.upper_index << ", order " << r.order
                          << "\n";
            }
            std::cout << "disc valuation : " << t.disc_valuation << "\n";
            std::cout << "phi(p^n-1)=n   : " << (t.herbrand_ok ? "ok" : "FAIL") << "\n";
            if (t.kummer_break)
                std::cout << "Kummer break of K|Q_p(xi^p): " << *t.kummer_break << "\n";
        }
        return t.herbrand_ok ? 0 : 1;
    }
    if (kind == "classfield") {
        const auto t = classfield_example_table(p, f, m);
        if (as_json) {
            json upper = json::array();
            for (long u : t.upper_breaks) upper.push_back(u);
            json out{{"kind", "classfield"},
                     {"p", p},
                     {"f", f},
                     {"m", m},
                     {"q", int_str(t.q)},
                     {"trivial", t.trivial},
                     {"g0", int_str(t.g0)},
                     {"index_table", int_list(t.index_table)},
                     {"upper", upper},
                     {"lower", int_list(t.lower_breaks)},
                     {"disc", int_str(t.disc_valuation)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "L|K with N(L^x) = <pi> U_" << m << ", q = " << t.q;
            if (t.trivial) std::cout << "  (trivial)";
            std::cout << "\n";
            std::cout << "(G^0:G^n), n=0.." << m << " : " << join_ints(t.index_table)
                      << "\n";
            std::cout << "upper breaks : ";
            for (size_t i = 0; i < t.upper_breaks.size(); ++i)
                std::cout << (i ? " " : "") << t.upper_breaks[i];
            std::cout << "\nlower breaks : " << join_ints(t.lower_breaks) << "\n";
            std::cout << "disc valuation : " << t.disc_valuation << "\n";
        }
        return 0;
    }
    if (kind == "nonkummerian") {
        const auto r = nonkummerian_maximal_report(p, e, f);
        if (as_json) {
            json upper = json::array();
            for (long u : r.upper_breaks) upper.push_back(u);
            json out{{"kind", "nonkummerian"},
                     {"p", p},
                     {"e", e},
                     {"f", f},
                     {"upper", upper},
                     {"lower", int_list(r.lower_breaks)},
                     {"g0", int_str(r.inertia_order)},
                     {"different", int_str(r.different_valuation)},
                     {"discriminant", int_str(r.discriminant_valuation)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "maximal exponent-p extension N|F, no p-th root of 1 in F "
                         "(e=" << e << ", f=" << f << ")\n";
            std::cout << "upper breaks : -1";
            for (long u : r.upper_breaks) std::cout << " " << u;
            std::cout << "\nlower breaks : -1 " << join_ints(r.lower_breaks) << "\n";
            std::cout << "inertia g0   : " << r.inertia_order << "\n";
            std::cout << "different    : " << r.different_valuation << "\n";
            std::cout << "discriminant : " << r.discriminant_valuation << "\n";
        }
        return 0;
    }
    throw UsageError("unknown table kind " + kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramification data for elementary abelian p-extensions of local "
                 "fields"};
    app.require_subcommand(1);

    long p = 0, e1 = 1, f = 1, m = 1, trials = 25;
    std::uint64_t seed = 0;
    int precision = 0, pi_precision = 8;
    bool as_json = false, unram = false;
    std::string breaks_arg, series_arg, kind;

    auto* cmd_breaks = app.add_subcommand(
        "breaks", "breaks and discriminant of the maximal extension M|K");
    cmd_breaks->add_option("--p", p)->required();
    cmd_breaks->add_option("--e1", e1)->required();
    cmd_breaks->add_option("--f", f)->required();
    cmd_breaks->add_flag("--json", as_json);

    auto* cmd_profile = app.add_subcommand(
        "profile", "admissibility and report for a custom break profile");
    cmd_profile->add_option("--p", p)->required();
    cmd_profile->add_option("--e1", e1)->required();
    cmd_profile->add_option("--f", f)->required();
    cmd_profile->add_option("--breaks", breaks_arg, "comma list of u:d steps")
        ->required();
    cmd_profile->add_flag("--unramified", unram, "include the break at -1");
    cmd_profile->add_flag("--json", as_json);

    auto* cmd_as = app.add_subcommand("as", "Artin-Schreier classes over F_q((pi))");
    cmd_as->add_option("--p", p)->required();
    cmd_as->add_option("--f", f)->required();
    cmd_as->add_option("--series", series_arg, "series JSON file, or - for stdin")
        ->required();
    bool mode_reduce = false, mode_report = false, mode_oracle = false;
    cmd_as->add_flag("--reduce", mode_reduce, "canonical class (default)");
    cmd_as->add_flag("--report", mode_report, "extension report for the generators");
    cmd_as->add_flag("--oracle", mode_oracle, "measured ramification break");
    cmd_as->add_option("--pi-precision", pi_precision,
                       "coefficients kept by the oracle");
    cmd_as->add_flag("--json", as_json);

    auto* cmd_norm = app.add_subcommand("norm", "norm congruences for p-primary units");
    cmd_norm->add_option("--p", p)->required();
    cmd_norm->add_option("--m", m)->required();
    cmd_norm->add_option("--trials", trials);
    cmd_norm->add_option("--seed", seed)->required();
    cmd_norm->add_option("--precision", precision);
    cmd_norm->add_flag("--json", as_json);

    auto* cmd_tables = app.add_subcommand("tables", "closed-form ramification tables");
    cmd_tables->add_option("--kind", kind, "cyclotomic | classfield | nonkummerian")
        ->required();
    cmd_tables->add_option("--p", p)->required();
    cmd_tables->add_option("--e,--e1", e1, "ramification index of the base field");
    cmd_tables->add_option("--f", f);
    cmd_tables->add_option("--m", m);
    cmd_tables->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
        if (cmd_breaks->parsed()) return run_breaks(p, e1, f, as_json);
        if (cmd_profile->parsed())
            return run_profile(p, e1, f, breaks_arg, unram, as_json);
        if (cmd_as->parsed()) {
            if (int(mode_reduce) + int(mode_report) + int(mode_oracle) > 1)
                throw UsageError("choose one of --reduce, --report, --oracle");
            const std::string mode =
                mode_report ? "report" : (mode_oracle ? "oracle" : "reduce");
            return run_as(p, f, series_arg, mode, pi_precision, as_json);
        }
        if (cmd_norm->parsed()) return run_norm(p, m, trials, seed, precision, as_json);
        if (cmd_tables->parsed()) return run_tables(kind, p, e1, f, m, as_json);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "ramlab: error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "ramlab: error: " << e.what() << "\n";
        return 2;
    } catch (const AdmissibilityError& e) {
        std::cerr << "ramlab: error: [" << e.rule() << "] " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ramlab: error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ramlab: error: " << e.what() << "\n";
        return 1;
    }
}
