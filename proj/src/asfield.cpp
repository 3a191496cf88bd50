#include <ramlab/asfield.hpp>

#include <ramlab/fpflag.hpp>

#include <algorithm>

namespace ramlab {

const char* to_string(ASClass::Kind k) {
    switch (k) {
        case ASClass::Kind::zero: return "zero";
        case ASClass::Kind::unramified: return "unramified";
        case ASClass::Kind::ramified: return "ramified";
    }
    return "?";
}

LaurentSeries ASClass::representative(int precision) const {
    std::vector<std::pair<int, FqElem>> terms;
    for (const auto& [m, c] : poles) terms.emplace_back(static_cast<int>(-m), c);
    if (trace_part != 0)
        terms.emplace_back(0, field->tau0() * field->from_int(trace_part));
    return LaurentSeries::from_terms(field, terms, precision);
}

ASClass reduce_class(const LaurentSeries& a) {
    if (!a.is_exact() && a.precision() < 1)
        throw std::domain_error("reduce_class: coefficients at exponents <= 0 must be "
                                "exact (precision >= 1 required)");
    const auto& field = a.field();
    const long p = field->p();

    // Working pole/constant map on exponents <= 0; the positive-valuation
    // part of a never affects the class.
    std::map<long, FqElem> part;  // key 0 = constant, key m>0 = coeff of pi^{-m}
    for (const auto& [e, c] : a.terms())
        if (e <= 0) part[-long(e)] = c;

    // Eliminate the most negative p-divisible exponent first: -pi -> -i.
    for (;;) {
        auto it = std::find_if(part.rbegin(), part.rend(), [&](const auto& kv) {
            return kv.first > 0 && kv.first % p == 0 && !kv.second.is_zero();
        });
        if (it == part.rend()) break;
        const long n = it->first, i = n / p;
        const FqElem u = it->second.pth_root();
        part.erase(n);
        auto [slot, fresh] = part.try_emplace(i, field->zero());
        slot->second += u;
        (void)fresh;
    }

    ASClass cls;
    cls.field = field;
    for (const auto& [m, c] : part)
        if (m > 0 && !c.is_zero()) cls.poles.emplace(m, c);
    const auto cit = part.find(0);
    cls.trace_part = cit == part.end() ? 0 : cit->second.trace();
    if (!cls.poles.empty()) {
        cls.kind = ASClass::Kind::ramified;
        cls.level = cls.poles.rbegin()->first;
    } else if (cls.trace_part != 0) {
        cls.kind = ASClass::Kind::unramified;
    }
    return cls;
}

long line_break(const ASClass& c) {
    if (c.kind != ASClass::Kind::ramified)
        throw std::domain_error(std::string("line_break: class is ") +
                                to_string(c.kind) + ", not ramified");
    return c.level;
}

std::pair<long, long> uniformiser_exponents(long m, long p) {
    if (m < 1 || m % p == 0)
        throw std::domain_error("uniformiser_exponents: m must be >= 1 and prime to p");
    for (long x = 1; x <= p - 1; ++x)
        if ((((-m * x) % p) + p) % p == 1) return {x, (1 + m * x) / p};
    throw std::logic_error("uniformiser_exponents: no solution found");
}

ASExtensionReport degree_p_report(const ASClass& c) {
    if (c.kind == ASClass::Kind::zero)
        throw std::domain_error("degree_p_report: zero class gives the trivial "
                                "extension");
    const long p = c.field->p();
    ASExtensionReport r;
    r.generator_count = 1;
    r.dimension = 1;
    r.degree = p;
    if (c.kind == ASClass::Kind::unramified) {
        r.has_unramified_part = true;
        r.residual_degree = p;
        r.different_valuation = 0;
        r.discriminant_valuation = 0;
        return r;
    }
    r.steps = {{c.level, 1}};
    r.lower_breaks = {Int(c.level)};
    r.different_valuation = Int(p - 1) * (1 + c.level);
    r.discriminant_valuation = r.different_valuation;  // totally ramified
    return r;
}

namespace {

// Elements of K[alpha], alpha^p = alpha + a: vectors of p Laurent series.
struct AlgebraElem {
    std::vector<LaurentSeries> c;  // c[j] multiplies alpha^j
};

AlgebraElem algebra_mul(const AlgebraElem& x, const AlgebraElem& y,
                        const LaurentSeries& a) {
    const auto& field = a.field();
    const long p = field->p();
    std::vector<LaurentSeries> prod(2 * p - 1, LaurentSeries(field, LaurentSeries::exact_precision));
    for (long i = 0; i < p; ++i)
        for (long j = 0; j < p; ++j)
            prod[i + j] = prod[i + j] + x.c[i] * y.c[j];
    // reduce alpha^k = alpha^{k-p+1} + a * alpha^{k-p} from the top down
    for (long k = 2 * p - 2; k >= p; --k) {
        prod[k - p + 1] = prod[k - p + 1] + prod[k];
        prod[k - p] = prod[k - p] + prod[k] * a;
        prod[k] = LaurentSeries(field, LaurentSeries::exact_precision);
    }
    prod.resize(p, LaurentSeries(field, LaurentSeries::exact_precision));
    return {std::move(prod)};
}

AlgebraElem algebra_pow(AlgebraElem b, long e, const LaurentSeries& a) {
    const auto& field = a.field();
    AlgebraElem r{std::vector<LaurentSeries>(field->p(),
                                             LaurentSeries(field, LaurentSeries::exact_precision))};
    r.c[0] = LaurentSeries::monomial(field, 0, field->one());
    while (e > 0) {
        if (e & 1) r = algebra_mul(r, b, a);
        e >>= 1;
        if (e > 0) b = algebra_mul(b, b, a);
    }
    return r;
}

}  // namespace

long verify_break_oracle(const ASClass& cls, int pi_precision) {
    if (cls.kind != ASClass::Kind::ramified)
        throw std::domain_error("verify_break_oracle: class must be ramified");
    if (pi_precision < 1)
        throw std::domain_error("verify_break_oracle: pi_precision must be >= 1");
    const auto& field = cls.field;
    const long p = field->p(), m = cls.level;
    const auto [x, y] = uniformiser_exponents(m, p);
    const LaurentSeries a = cls.representative();

    AlgebraElem alpha{std::vector<LaurentSeries>(p, LaurentSeries(field, LaurentSeries::exact_precision))};
    alpha.c[1] = LaurentSeries::monomial(field, 0, field->one());
    AlgebraElem alpha_plus_1 = alpha;
    alpha_plus_1.c[0] = LaurentSeries::monomial(field, 0, field->one());

    // sigma(w) - w = ((alpha+1)^x - alpha^x) pi^y for the uniformiser
    // w = alpha^x pi^y.
    AlgebraElem lhs = algebra_pow(alpha_plus_1, x, a);
    AlgebraElem rhs = algebra_pow(alpha, x, a);
    const LaurentSeries piy = LaurentSeries::monomial(
        field, static_cast<int>(y), field->one(), static_cast<int>(y) + pi_precision);

    // v_L(sum c_j alpha^j) = min_j (p v_K(c_j) - m j); the candidates are
    // pairwise distinct mod p, so no cancellation is possible.
    long best = std::numeric_limits<long>::max();
    std::vector<std::pair<long, long>> unknown;  // (bound, j) for truncated-away c_j
    for (long j = 0; j < p; ++j) {
        LaurentSeries cj = (lhs.c[j] - rhs.c[j]) * piy;
        if (cj.known_nonzero())
            best = std::min(best, p * cj.valuation() - m * j);
        else if (!cj.is_exact())
            unknown.emplace_back(p * long(cj.precision()) - m * j, j);
    }
    if (best == std::numeric_limits<long>::max())
        throw std::domain_error("verify_break_oracle: sigma(w) - w vanished at the "
                                "working precision; increase pi_precision");
    for (const auto& [bound, j] : unknown)
        if (bound <= best)
            throw std::domain_error("verify_break_oracle: precision too small to "
                                    "certify coefficient of alpha^" + std::to_string(j));
    return best;
}

ASExtensionReport extension_report(const std::vector<LaurentSeries>& generators) {
    if (generators.empty())
        throw std::domain_error("extension_report: need at least one generator");
    const auto& field = generators.front().field();
    const long p = field->p(), f = field->f();

    std::vector<ASClass> classes;
    classes.reserve(generators.size());
    for (const auto& g : generators) classes.push_back(reduce_class(g));

    // Coordinates: per pole exponent (descending level) f columns, then the
    // trace column; the level-<=u subspaces are then column suffixes.
    std::vector<long> levels;
    for (const auto& c : classes)
        for (const auto& [m, _] : c.poles) levels.push_back(m);
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    const size_t ncols = levels.size() * f + 1;
    FpMatrix mat(p, 0, ncols);
    for (const auto& c : classes) {
        std::vector<int> row(ncols, 0);
        for (const auto& [m, coef] : c.poles) {
            const size_t block =
                std::find(levels.begin(), levels.end(), m) - levels.begin();
            for (long k = 0; k < f; ++k) row[block * f + k] = coef.coeffs()[k];
        }
        row[ncols - 1] = static_cast<int>(c.trace_part);
        mat.append_row(row);
    }
    const size_t dim = mat.rref();
    const auto pivots = mat.pivot_columns();

    ASExtensionReport r;
    r.generator_count = static_cast<long>(generators.size());
    r.dimension = static_cast<long>(dim);
    r.degree = int_pow(Int(p), r.dimension);

    // #pivots in the suffix of columns belonging to levels <= u equals
    // dim(span ∩ level-<=u subspace).
    long sum_d = 0;
    for (size_t b = levels.size(); b-- > 0;) {
        const size_t suffix_start = b * f + f;  // columns of levels < levels[b]
        const size_t in_lower = std::count_if(
            pivots.begin(), pivots.end(), [&](size_t c) { return c >= suffix_start; });
        const size_t in_here = std::count_if(
            pivots.begin(), pivots.end(), [&](size_t c) { return c >= b * f; });
        const long d = static_cast<long>(in_here - in_lower);
        if (d > 0) {
            r.steps.push_back({levels[b], d});
            sum_d += d;
        }
    }
    r.has_unramified_part =
        std::count(pivots.begin(), pivots.end(), ncols - 1) > 0;
    if (sum_d + (r.has_unramified_part ? 1 : 0) != r.dimension)
        throw std::logic_error("extension_report: step dimensions do not add up to "
                               "the span dimension");
    r.residual_degree = r.has_unramified_part ? p : 1;

    if (r.steps.empty()) {
        r.different_valuation = 0;
        r.discriminant_valuation = 0;
        return r;
    }
    const auto psi = PiecewiseLinear::from_steps(p, r.steps);
    const Int g0 = int_pow(Int(p), sum_d);
    const Int un = psi.break_abscissas().back();
    const Int ln = psi.break_values().back();
    r.lower_breaks = psi.break_values();
    r.different_valuation = (1 + un) * g0 - (1 + ln);
    r.discriminant_valuation = r.residual_degree * r.different_valuation;
    return r;
}

long brute_dimension(long p, long f, long m, long max_coords) {
    if (m < 0) throw std::domain_error("brute_dimension: m must be >= 0");
    const long ncols = (m + 1) * f;
    if (ncols > max_coords)
        throw std::domain_error("brute_dimension: guard exceeded, (m+1)f > max_coords");
    const auto field = FqField::make(p, f);

    // Coordinates of exponents -m..0 (f each); rows are wp of the basis
    // monomials b pi^{-j}, j in [0, floor(m/p)].  wp of the positive part
    // stays positive and never shows up in these coordinates.
    auto col = [&](long exp, long k) { return (exp + m) * f + k; };
    FpMatrix mat(p, 0, static_cast<size_t>(ncols));
    for (long j = 0; j <= m / p; ++j) {
        for (long b = 0; b < f; ++b) {
            std::vector<int> basis(f, 0);
            basis[b] = 1;
            const FqElem x = field->element(basis);
            const FqElem xp = x.pow(p);
            std::vector<int> row(ncols, 0);
            if (j == 0) {
                // wp on constants: x^p - x at exponent 0
                const FqElem w = xp - x;
                for (long k = 0; k < f; ++k) row[col(0, k)] = w.coeffs()[k];
            } else {
                for (long k = 0; k < f; ++k) {
                    row[col(-p * j, k)] = xp.coeffs()[k];
                    row[col(-j, k)] = (-x).coeffs()[k];
                }
            }
            mat.append_row(row);
        }
    }
    return ncols - static_cast<long>(rank(std::move(mat)));
}

}  // namespace ramlab
