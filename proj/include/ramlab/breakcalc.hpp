#pragma once

#include <ramlab/bigint.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Integer combinatorics of ramification for elementary abelian p-extensions
// of a local field K with e = (p-1)*e1 and residue field of degree f: break
// sequences, Hasse-Herbrand psi/phi, different and discriminant valuations,
// extension counts, and the closed-form tables for cyclotomic and class-field
// examples.  Everything here is a pure function on immutable values.

namespace ramlab {

// Ramification shape (p, e1, f) of a base field containing a primitive p-th
// root of unity: e = (p-1)*e1 is the absolute ramification index, q = p^f the
// residue cardinality, top = p*e1 the largest possible upper break.
class FieldShape {
public:
    FieldShape(long p, long e1, long f);

    long p() const { return p_; }
    long e1() const { return e1_; }
    long f() const { return f_; }
    long e() const { return e_; }
    long top() const { return top_; }  // p*e1
    const Int& q() const { return q_; }

private:
    long p_, e1_, f_, e_, top_;
    Int q_;
};

struct BreakStep {
    long upper;  // upper break u_i
    long dim;    // F_p-dimension d_i of the step
    bool operator==(const BreakStep&) const = default;
};

// Thrown when a break sequence violates an admissibility rule; rule() is one
// of "ordering", "range", "p-coprimality", "top-dimension", "dimension" and
// is surfaced verbatim by the CLI.
class AdmissibilityError : public std::domain_error {
public:
    AdmissibilityError(std::string rule, const std::string& what)
        : std::domain_error(what), rule_(std::move(rule)) {}
    const std::string& rule() const { return rule_; }

private:
    std::string rule_;
};

// A validated sequence of upper breaks with step dimensions.  The break at -1
// (unramified part) is carried as a flag, never as a list entry, so entries
// are always >= 1.
class BreakProfile {
public:
    BreakProfile(const FieldShape& shape, std::vector<BreakStep> steps,
                 bool has_unramified_part = false);

    const std::vector<BreakStep>& steps() const { return steps_; }
    bool has_unramified_part() const { return unram_; }
    bool empty() const { return steps_.empty(); }
    long total_dim() const;  // sum of d_i, ramified part only

private:
    std::vector<BreakStep> steps_;
    bool unram_;
};

// The Hasse-Herbrand function psi of an extension, stored as exact break
// points plus integer slopes: slope 1 on [0, u_1], slope p^{d_1+...+d_i} on
// ]u_i, u_{i+1}], identity left of 0.  phi is the exact inverse.
class PiecewiseLinear {
public:
    static PiecewiseLinear from_steps(long p, const std::vector<BreakStep>& steps);

    Rat operator()(const Rat& w) const;  // psi(w)
    Rat inverse_at(const Rat& y) const;  // phi(y)
    Int at_integer(const Int& w) const;  // psi(w) for integer w >= 0

    // (u_i, psi(u_i)) per break, and the slope valid after u_i;
    // slope_before(0) == 1.
    const std::vector<Int>& break_abscissas() const { return xs_; }
    const std::vector<Int>& break_values() const { return ys_; }
    const std::vector<Int>& slopes_after() const { return slopes_; }

private:
    std::vector<Int> xs_, ys_, slopes_;
};

struct RamificationReport {
    bool has_unramified_part = false;   // break at -1
    std::vector<long> upper_breaks;     // positive breaks, ascending
    std::vector<long> step_dims;        // d_i per positive break
    std::vector<Int> lower_breaks;      // psi(upper_breaks[i])
    std::vector<Int> segment_index;     // (G^0 : G^u) on ]u_i, u_{i+1}]
    Int inertia_order;                  // g_0
    Int degree;
    Int different_valuation;            // in the top field's valuation
    long residual_degree = 1;           // 1 or p
    Int discriminant_valuation;         // residual_degree * different
};

long a_of(long i, long p);  // floor((i-1)/(p-1))
long c_of(long m, long p);  // m - floor(m/p), integers in [1,m] prime to p

// Upper breaks of the maximal extension M|K: b^(i) = i + a(i) for i in [1,e],
// then p*e1.  Length e+1.
std::vector<long> upper_breaks(const FieldShape& shape);

// Lower breaks b_(i) of M|K, directly from the closed form
// b_(i) = (1+q+...+q^{i-1}) + (q^{p-1}+...+q^{a(i)(p-1)}), b_(e+1) = b_(e)+q^e.
std::vector<Int> lower_breaks(const FieldShape& shape);

PiecewiseLinear psi_of_profile(const FieldShape& shape, const BreakProfile& profile);

// Valuation of the different from the break data: (1+u_n)g0 - (1+psi(u_n)).
// Also computed as sum_t (Card G_t - 1) segment by segment; the two routes
// must agree or a logic_error is thrown.
Int different_from_profile(const FieldShape& shape, const BreakProfile& profile,
                           const Int& g0);

RamificationReport maximal_extension_report(const FieldShape& shape);
RamificationReport custom_extension_report(const FieldShape& shape,
                                           const BreakProfile& profile);

// F_p-dimension of G^n for the maximal extension (0 past p*e1, 2+ef left of
// the break at -1), and of bar U_n in the unit filtration chain.  They pair:
// dim_upper_group(n) + dim_bar_u(p*e1 - n + 1) == 2 + e*f.
long dim_upper_group(const FieldShape& shape, long n);
long dim_bar_u(const FieldShape& shape, long n);

// Number of ramified degree-p cyclic extensions with single upper break u.
Int count_single_break(const FieldShape& shape, long u);

// Discriminant of M|K via the conductor-discriminant product formula, both as
// the term-by-term sum (p-1) * sum (t_i+1) n_i and as the closed form; the
// two must agree.
Int fdpf_discriminant(const FieldShape& shape);

enum class ExtremalMode { min, max };

// Exhaustive search over admissible totally ramified profiles of degree p^m;
// returns the extremal v_K(d_{L|K}) and a witness profile.
std::pair<Int, BreakProfile> extremal_discriminant(const FieldShape& shape, long m,
                                                   ExtremalMode mode);

struct CyclotomicTable {
    long p = 0, m = 0;
    bool trivial = false;  // p = 2, m = 1
    Int g0;                // order of inertia = phi(p^m)
    // lower-numbering rows: G_u has order `order` for u in [from, to[,
    // to = -1 meaning unbounded.
    struct Row {
        Int from, to;
        long upper_index;  // the w with G_u = G^w
        Int order;
    };
    std::vector<Row> rows;
    bool herbrand_ok = true;       // g-sum identity phi(p^n - 1) = n, n in [1,m]
    Int disc_valuation;            // m*phi(p^m) - p^{m-1}
    std::optional<Int> kummer_break;  // p^{m-1}-1 when m > 1 (reported only)
};

CyclotomicTable cyclotomic_table(long p, long m);

struct ClassFieldTable {
    long p = 0, f = 0, m = 0;
    Int q;
    bool trivial = false;        // q = 2, m = 1
    Int g0;                      // q^{m-1}(q-1)
    std::vector<long> upper_breaks;
    std::vector<Int> lower_breaks;
    std::vector<Int> index_table;  // (G^0 : G^n) for n in [0, m]
    Int disc_valuation;            // m q^{m-1}(q-1) - q^{m-1}
};

ClassFieldTable classfield_example_table(long p, long f, long m);

// Maximal elementary abelian p-extension of a field F WITHOUT a primitive
// p-th root of unity (so p != 2); e is the absolute ramification index of F,
// not tied to p-1.  There are e positive breaks and no break at the top.
RamificationReport nonkummerian_maximal_report(long p, long e, long f);

// inf(p*n, n+e) on the number-field side (n > 0), inf(n, p*n) on the
// function-field side.
long lambda_numberfield(long p, long e, long n);
long lambda_funcfield(long p, long n);

}  // namespace ramlab
