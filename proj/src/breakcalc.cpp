#include <ramlab/breakcalc.hpp>

#include <algorithm>
#include <cassert>
#include <functional>

namespace ramlab {

FieldShape::FieldShape(long p, long e1, long f) : p_(p), e1_(e1), f_(f) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (e1 < 1) throw std::invalid_argument("e1 must be >= 1");
    if (f < 1) throw std::invalid_argument("f must be >= 1");
    e_ = (p - 1) * e1;
    top_ = p * e1;
    q_ = int_pow(Int(p), f);
}

long a_of(long i, long p) {
    if (i < 1) throw std::domain_error("a(i) needs i >= 1");
    return (i - 1) / (p - 1);
}

long c_of(long m, long p) {
    if (m < 0) throw std::domain_error("c(m) needs m >= 0");
    return m - m / p;
}

BreakProfile::BreakProfile(const FieldShape& shape, std::vector<BreakStep> steps,
                           bool has_unramified_part)
    : steps_(std::move(steps)), unram_(has_unramified_part) {
    const long p = shape.p(), top = shape.top(), f = shape.f();
    for (size_t i = 0; i < steps_.size(); ++i) {
        const auto& s = steps_[i];
        if (i > 0 && steps_[i - 1].upper >= s.upper)
            throw AdmissibilityError("ordering", "breaks must be strictly increasing");
        if (s.upper < 1 || s.upper > top)
            throw AdmissibilityError("range", "break " + std::to_string(s.upper) +
                                                  " outside [1," + std::to_string(top) + "]");
        const bool is_top = s.upper == top;
        if (!is_top && s.upper % p == 0)
            throw AdmissibilityError("p-coprimality",
                                     "break " + std::to_string(s.upper) +
                                         " is divisible by p but is not p*e1");
        if (is_top) {
            if (s.dim != 1)
                throw AdmissibilityError("top-dimension",
                                         "the step at p*e1 must have dimension 1");
        } else if (s.dim < 1 || s.dim > f) {
            throw AdmissibilityError("dimension", "step dimension " + std::to_string(s.dim) +
                                                      " outside [1," + std::to_string(f) + "]");
        }
    }
}

long BreakProfile::total_dim() const {
    long d = 0;
    for (const auto& s : steps_) d += s.dim;
    return d;
}

PiecewiseLinear PiecewiseLinear::from_steps(long p, const std::vector<BreakStep>& steps) {
    PiecewiseLinear pl;
    Int x = 0, y = 0, slope = 1;
    for (const auto& s : steps) {
        Int nx = s.upper;
        y += (nx - x) * slope;
        x = nx;
        slope *= int_pow(Int(p), s.dim);
        pl.xs_.push_back(x);
        pl.ys_.push_back(y);
        pl.slopes_.push_back(slope);
    }
    return pl;
}

Rat PiecewiseLinear::operator()(const Rat& w) const {
    if (w <= 0) return w;  // identity on [-1, 0], extended left
    Rat x = 0, y = 0;
    for (size_t i = 0; i < xs_.size(); ++i) {
        if (w <= Rat(xs_[i]))
            return y + (w - x) * Rat(i == 0 ? Int(1) : slopes_[i - 1]);
        x = Rat(xs_[i]);
        y = Rat(ys_[i]);
    }
    return y + (w - x) * Rat(xs_.empty() ? Int(1) : slopes_.back());
}

Rat PiecewiseLinear::inverse_at(const Rat& v) const {
    if (v <= 0) return v;
    Rat x = 0, y = 0;
    for (size_t i = 0; i < xs_.size(); ++i) {
        if (v <= Rat(ys_[i]))
            return x + (v - y) / Rat(i == 0 ? Int(1) : slopes_[i - 1]);
        x = Rat(xs_[i]);
        y = Rat(ys_[i]);
    }
    return x + (v - y) / Rat(xs_.empty() ? Int(1) : slopes_.back());
}

Int PiecewiseLinear::at_integer(const Int& w) const {
    Rat r = (*this)(Rat(w));
    if (denominator(r) != 1)
        throw std::logic_error("PiecewiseLinear::at_integer: value is not integral");
    return numerator(r);
}

std::vector<long> upper_breaks(const FieldShape& shape) {
    std::vector<long> ub;
    ub.reserve(shape.e() + 1);
    for (long i = 1; i <= shape.e(); ++i) ub.push_back(i + a_of(i, shape.p()));
    ub.push_back(shape.top());
    return ub;
}

std::vector<Int> lower_breaks(const FieldShape& shape) {
    const Int& q = shape.q();
    std::vector<Int> lb;
    lb.reserve(shape.e() + 1);
    for (long i = 1; i <= shape.e(); ++i) {
        Int b = 0;
        for (long j = 0; j <= i - 1; ++j) b += int_pow(q, j);
        for (long j = 1; j <= a_of(i, shape.p()); ++j) b += int_pow(q, j * (shape.p() - 1));
        lb.push_back(b);
    }
    lb.push_back(lb.back() + int_pow(q, shape.e()));
    return lb;
}

PiecewiseLinear psi_of_profile(const FieldShape& shape, const BreakProfile& profile) {
    return PiecewiseLinear::from_steps(shape.p(), profile.steps());
}

Int different_from_profile(const FieldShape& shape, const BreakProfile& profile,
                           const Int& g0) {
    if (profile.empty())
        throw std::domain_error("different_from_profile: empty profile (trivial or "
                                "unramified extension has different 0)");
    if (g0 != int_pow(Int(shape.p()), profile.total_dim()))
        throw std::domain_error("different_from_profile: g0 must be p^(sum of dims)");

    const auto psi = psi_of_profile(shape, profile);
    const Int un = psi.break_abscissas().back();
    const Int ln = psi.break_values().back();
    Int from_breaks = (1 + un) * g0 - (1 + ln);

    // Independent route: sum of (Card G_t - 1) over t in N, block by block in
    // the lower numbering.
    Int direct = (psi.break_values().front() + 1) * (g0 - 1);
    for (size_t i = 0; i + 1 < psi.break_values().size(); ++i) {
        Int card = exact_div(g0, psi.slopes_after()[i]);
        direct += (psi.break_values()[i + 1] - psi.break_values()[i]) * (card - 1);
    }
    if (from_breaks != direct)
        throw std::logic_error("different_from_profile: break-data formula disagrees "
                               "with the direct ramification sum");
    return from_breaks;
}

RamificationReport custom_extension_report(const FieldShape& shape,
                                           const BreakProfile& profile) {
    RamificationReport r;
    r.has_unramified_part = profile.has_unramified_part();
    r.residual_degree = r.has_unramified_part ? shape.p() : 1;
    const long sum_d = profile.total_dim();
    r.inertia_order = int_pow(Int(shape.p()), sum_d);
    r.degree = r.inertia_order * r.residual_degree;

    if (profile.empty()) {
        if (!profile.has_unramified_part())
            throw std::domain_error("custom_extension_report: trivial extension");
        r.different_valuation = 0;
        r.discriminant_valuation = 0;
        return r;
    }

    const auto psi = psi_of_profile(shape, profile);
    for (const auto& s : profile.steps()) {
        r.upper_breaks.push_back(s.upper);
        r.step_dims.push_back(s.dim);
    }
    r.lower_breaks = psi.break_values();
    r.segment_index.push_back(1);
    for (size_t i = 0; i + 1 < psi.slopes_after().size(); ++i)
        r.segment_index.push_back(psi.slopes_after()[i]);
    r.different_valuation = different_from_profile(shape, profile, r.inertia_order);
    r.discriminant_valuation = r.residual_degree * r.different_valuation;
    return r;
}

RamificationReport maximal_extension_report(const FieldShape& shape) {
    std::vector<BreakStep> steps;
    const auto ub = upper_breaks(shape);
    for (long i = 0; i < shape.e(); ++i) steps.push_back({ub[i], shape.f()});
    steps.push_back({shape.top(), 1});
    auto r = custom_extension_report(shape, BreakProfile(shape, steps, true));

    // Cross-check against the closed form (1+p*e1)*p*q^e - b_(e+1) - 1.
    Int closed = (1 + shape.top()) * shape.p() * int_pow(shape.q(), shape.e()) -
                 lower_breaks(shape).back() - 1;
    if (r.different_valuation != closed)
        throw std::logic_error("maximal_extension_report: break-data route disagrees "
                               "with the closed form");
    return r;
}

long dim_upper_group(const FieldShape& shape, long n) {
    const long e = shape.e(), f = shape.f();
    if (n <= -1) return 2 + e * f;
    if (n > shape.top()) return 0;
    if (n <= 0) return 1 + e * f;  // G^u = G^1 on ]-1, 1]
    long fl = (n - 1) / shape.p();
    return 1 + (e - n + 1 + fl) * f;
}

long dim_bar_u(const FieldShape& shape, long n) {
    const long e = shape.e(), f = shape.f();
    if (n <= 0) return 2 + e * f;
    if (n > shape.top()) return 0;
    return 1 + (e - c_of(n - 1, shape.p())) * f;
}

Int count_single_break(const FieldShape& shape, long u) {
    if (u == shape.top()) return shape.p() * int_pow(shape.q(), shape.e());
    if (u < 1 || u >= shape.top() || u % shape.p() == 0)
        throw AdmissibilityError("range", "not an admissible single break: " +
                                              std::to_string(u));
    const long i = c_of(u, shape.p());
    assert(i + a_of(i, shape.p()) == u);
    return exact_div(shape.p() * (int_pow(shape.q(), i) - int_pow(shape.q(), i - 1)),
                     Int(shape.p() - 1));
}

Int fdpf_discriminant(const FieldShape& shape) {
    const long p = shape.p(), e = shape.e(), e1 = shape.e1();
    const Int& q = shape.q();
    // Term by term: (p-1) * sum_{i=1}^{e+1} (t_i + 1) n_i.
    Int sum = 0;
    for (long i = 1; i <= e; ++i) {
        Int ni = count_single_break(shape, i + a_of(i, p));
        sum += (i + a_of(i, p) + 1) * ni;
    }
    sum += (shape.top() + 1) * p * int_pow(q, e);
    sum *= p - 1;

    // Closed form (5).
    Int qe = int_pow(q, e);
    Int closed = (e1 * p * p + p - 1) * qe - exact_div(qe - 1, q - 1) -
                 exact_div(qe - 1, int_pow(q, p - 1) - 1);
    closed *= p;
    if (sum != closed)
        throw std::logic_error("fdpf_discriminant: term-by-term sum disagrees with the "
                               "closed form");
    return sum;
}

std::pair<Int, BreakProfile> extremal_discriminant(const FieldShape& shape, long m,
                                                   ExtremalMode mode) {
    const long f = shape.f();
    const long mmax = f * c_of(shape.top() - 1, shape.p()) + 1;
    if (m < 1 || m > mmax)
        throw std::domain_error("extremal_discriminant: m must be in [1," +
                                std::to_string(mmax) + "]");

    const auto ub = upper_breaks(shape);  // all admissible breaks, top last
    // Search space is (f+1)^e * 2 profiles; this is an exhaustive search, not
    // a production counter.
    double space = 2.0;
    for (long i = 0; i < shape.e(); ++i) {
        space *= f + 1;
        if (space > double(1 << 24))
            throw std::domain_error("extremal_discriminant: search space too large");
    }

    std::optional<Int> best;
    std::vector<BreakStep> best_steps, cur;
    std::function<void(size_t, long)> rec = [&](size_t idx, long remaining) {
        if (remaining == 0) {
            BreakProfile prof(shape, cur, false);
            Int v = different_from_profile(shape, prof,
                                           int_pow(Int(shape.p()), prof.total_dim()));
            // totally ramified, so v_K(d) = v_L(D)
            if (!best || (mode == ExtremalMode::max ? v > *best : v < *best)) {
                best = v;
                best_steps = cur;
            }
            return;
        }
        if (idx == ub.size()) return;
        const bool is_top = ub[idx] == shape.top();
        const long dmax = std::min<long>(is_top ? 1 : f, remaining);
        for (long d = 1; d <= dmax; ++d) {
            cur.push_back({ub[idx], d});
            rec(idx + 1, remaining - d);
            cur.pop_back();
        }
        rec(idx + 1, remaining);  // skip this break
    };
    rec(0, m);
    if (!best) throw std::logic_error("extremal_discriminant: no admissible profile");
    return {*best, BreakProfile(shape, best_steps, false)};
}

CyclotomicTable cyclotomic_table(long p, long m) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    CyclotomicTable t;
    t.p = p;
    t.m = m;
    Int pm1 = int_pow(Int(p), m - 1);
    t.g0 = pm1 * (p - 1);  // phi(p^m)
    t.disc_valuation = m * t.g0 - pm1;
    if (p == 2 && m == 1) {
        t.trivial = true;
        t.disc_valuation = 0;
        return t;
    }

    // G_u = G^w for u in [p^{w-1}, p^w[, with G_0 = G^0 and G^w of order
    // p^{m-w}; for p = 2 the rows w = 0, 1 have the same order (G^1 = G^0).
    t.rows.push_back({0, 1, 0, t.g0});
    for (long w = 1; w <= m; ++w)
        t.rows.push_back({int_pow(Int(p), w - 1), w == m ? Int(-1) : int_pow(Int(p), w),
                          w, int_pow(Int(p), m - w)});

    // Herbrand identity g_0 * phi(p^n - 1) = g_1 + ... + g_{p^n-1} = n * g_0.
    for (long n = 1; n <= m; ++n) {
        Int gsum = 0;
        for (long w = 1; w <= n; ++w)
            gsum += (int_pow(Int(p), w) - int_pow(Int(p), w - 1)) * int_pow(Int(p), m - w);
        if (gsum != n * t.g0) t.herbrand_ok = false;
    }

    // Cross-check the discriminant against the direct sum over the rows.
    Int direct = t.g0 - 1;  // u = 0
    for (long w = 1; w <= m; ++w)
        direct += (int_pow(Int(p), w) - int_pow(Int(p), w - 1)) *
                  (int_pow(Int(p), m - w) - 1);
    if (direct != t.disc_valuation)
        throw std::logic_error("cyclotomic_table: direct sum disagrees with the closed "
                               "form");

    if (m > 1) t.kummer_break = pm1 - 1;
    return t;
}

ClassFieldTable classfield_example_table(long p, long f, long m) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (f < 1 || m < 1) throw std::invalid_argument("need f >= 1, m >= 1");
    ClassFieldTable t;
    t.p = p;
    t.f = f;
    t.m = m;
    t.q = int_pow(Int(p), f);
    const Int& q = t.q;
    Int qm1 = int_pow(q, m - 1);
    t.g0 = qm1 * (q - 1);
    t.disc_valuation = m * t.g0 - qm1;
    t.index_table.push_back(1);
    for (long n = 1; n <= m; ++n) t.index_table.push_back(int_pow(q, n - 1) * (q - 1));
    if (q == 2 && m == 1) {
        t.trivial = true;
        return t;
    }
    if (q != 2) {
        for (long i = 1; i <= m; ++i) {
            t.upper_breaks.push_back(i - 1);
            t.lower_breaks.push_back(int_pow(q, i - 1) - 1);
        }
    } else {
        for (long i = 1; i < m; ++i) {
            t.upper_breaks.push_back(i);
            t.lower_breaks.push_back(int_pow(q, i) - 1);
        }
    }
    // break-data route: (1 + b^(last)) g0 - (1 + b_(last))
    Int from_breaks = (1 + t.upper_breaks.back()) * t.g0 - (1 + t.lower_breaks.back());
    if (from_breaks != t.disc_valuation)
        throw std::logic_error("classfield_example_table: break-data route disagrees "
                               "with the closed form");
    return t;
}

RamificationReport nonkummerian_maximal_report(long p, long e, long f) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (p == 2)
        throw std::domain_error("nonkummerian_maximal_report: every field contains the "
                                "2nd roots of unity; use maximal_extension_report");
    if (e < 1 || f < 1) throw std::invalid_argument("need e >= 1, f >= 1");
    RamificationReport r;
    r.has_unramified_part = true;
    r.residual_degree = p;
    const Int q = int_pow(Int(p), f);
    r.inertia_order = int_pow(q, e);
    r.degree = r.inertia_order * p;

    // e positive breaks b^(i) = i + a(i); lower breaks by the recursion
    // b_(i+1) = b_(i) + (b^(i+1) - b^(i)) q^i.
    Int slope = 1, low = 0;
    long prev = 0;
    for (long i = 1; i <= e; ++i) {
        long b = i + a_of(i, p);
        low += (b - prev) * slope;
        prev = b;
        r.upper_breaks.push_back(b);
        r.step_dims.push_back(f);
        r.lower_breaks.push_back(low);
        r.segment_index.push_back(slope);
        slope *= q;
    }
    r.different_valuation = (1 + r.upper_breaks.back()) * r.inertia_order -
                            (1 + r.lower_breaks.back());
    r.discriminant_valuation = p * r.different_valuation;
    return r;
}

long lambda_numberfield(long p, long e, long n) {
    if (n <= 0) throw std::domain_error("lambda_numberfield: n must be > 0");
    return std::min(p * n, n + e);
}

long lambda_funcfield(long p, long n) { return std::min(n, p * n); }

}  // namespace ramlab
