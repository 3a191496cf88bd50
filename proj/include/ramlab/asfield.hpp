#pragma once

#include <ramlab/breakcalc.hpp>
#include <ramlab/laurent.hpp>

#include <map>

// Artin-Schreier theory over K = F_q((pi)): canonical reduction of classes of
// K/wp(K), the level filtration, degree-p ramification data, the measured
// break oracle, and ramification reports for the elementary abelian
// p-extension attached to a set of generators.

namespace ramlab {

// Canonical representative of a class of K/wp(K): a pole part supported on
// negative exponents prime to p, plus a constant part recorded by its trace
// in F_p (the representative constant is trace_part * tau0).
struct ASClass {
    enum class Kind { zero, unramified, ramified };

    std::shared_ptr<const FqField> field;
    std::map<long, FqElem> poles;  // m -> nonzero coefficient of pi^{-m}, p ∤ m
    long trace_part = 0;           // in [0, p)
    long level = 0;                // largest pole m, 0 if none
    Kind kind = Kind::zero;

    LaurentSeries representative(int precision = LaurentSeries::exact_precision) const;
    bool operator==(const ASClass& o) const {
        return poles == o.poles && trace_part == o.trace_part && level == o.level &&
               kind == o.kind;
    }
};

const char* to_string(ASClass::Kind k);

// Canonical reduction: eliminates every p-divisible pole exponent with
// wp-corrections, drops the positive-valuation part, and reduces the constant
// through the trace.  Needs the coefficients at exponents <= 0 exact, i.e.
// precision >= 1.
ASClass reduce_class(const LaurentSeries& a);

// The ramification break of the degree-p cyclic extension attached to a
// ramified class; equals its level.
long line_break(const ASClass& c);

// The unique x in [1, p-1] with -mx ≡ 1 (mod p) and y = (1+mx)/p, so that
// alpha^x pi^y is a uniformiser of K(alpha), wp(alpha) of level m.
std::pair<long, long> uniformiser_exponents(long m, long p);

struct ASExtensionReport {
    long generator_count = 0;
    long dimension = 0;  // F_p-dimension of the span of the classes
    bool has_unramified_part = false;
    std::vector<BreakStep> steps;    // positive upper breaks with dimensions
    std::vector<Int> lower_breaks;   // psi at the upper breaks
    Int degree;                      // p^dimension
    Int different_valuation;
    long residual_degree = 1;        // p when the unramified line is present
    Int discriminant_valuation;
};

// Break, degree and different/discriminant of the degree-p extension of a
// single nonzero class.
ASExtensionReport degree_p_report(const ASClass& c);

// Measures the break of a ramified class by direct computation in
// L = K[alpha]/(alpha^p - alpha - a): evaluates sigma(w) - w for the
// uniformiser w = alpha^x pi^y and returns its valuation, which must come out
// m + 1.  pi_precision is the number of known coefficients of pi^y.
long verify_break_oracle(const ASClass& c, int pi_precision);

// Reduces the generators, spans their coordinate vectors over F_p, reads the
// break filtration off the span, and applies the different formula with
// g0 = p^(sum of step dims).
ASExtensionReport extension_report(const std::vector<LaurentSeries>& generators);

// dim_{F_p} (p^{-m} + wp(K)) / wp(K) by pure linear algebra on the
// coordinates of exponents [-m, 0]; must equal 1 + c(m) f.
long brute_dimension(long p, long f, long m, long max_coords = 4096);

}  // namespace ramlab
