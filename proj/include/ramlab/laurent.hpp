#pragma once

#include <ramlab/fq.hpp>

#include <limits>
#include <map>
#include <utility>
#include <vector>

// Truncated Laurent series over F_q: the concrete carrier of K = F_q((pi)).
// A series stores exact coefficients for every exponent below its absolute
// precision N; exponents >= N are unknown.  Sums keep the minimum of the two
// precisions, products keep min(N_a + v_b, N_b + v_a).  Polynomials in pi and
// 1/pi can be exact (precision == exact_precision).

namespace ramlab {

class LaurentSeries {
public:
    static constexpr int exact_precision = std::numeric_limits<int>::max();

    // O(pi^precision): no known nonzero coefficient.
    LaurentSeries(std::shared_ptr<const FqField> field, int precision);

    static LaurentSeries monomial(const std::shared_ptr<const FqField>& field, int exp,
                                  const FqElem& c, int precision = exact_precision);
    static LaurentSeries from_terms(const std::shared_ptr<const FqField>& field,
                                    const std::vector<std::pair<int, FqElem>>& terms,
                                    int precision = exact_precision);

    const std::shared_ptr<const FqField>& field() const { return field_; }
    int precision() const { return prec_; }
    bool is_exact() const { return prec_ == exact_precision; }

    // True iff the series has a stored nonzero coefficient.  A series with
    // none is indistinguishable from 0 at its precision.
    bool known_nonzero() const { return !c_.empty(); }
    int valuation() const;  // throws when not known_nonzero()

    // Coefficient at exp; exact zero below the stored range, throws at or
    // above the precision.
    FqElem coeff(int exp) const;
    std::vector<std::pair<int, FqElem>> terms() const;  // nonzero ones, ascending

    LaurentSeries operator+(const LaurentSeries&) const;
    LaurentSeries operator-(const LaurentSeries&) const;
    LaurentSeries operator*(const LaurentSeries&) const;
    LaurentSeries operator-() const;
    LaurentSeries scaled(const FqElem& c) const;
    LaurentSeries shifted(int k) const;  // * pi^k
    LaurentSeries truncated(int precision) const;
    LaurentSeries pow(long e) const;  // e >= 0

    // Same field, same precision, identical coefficients below it.
    bool equals_at_precision(const LaurentSeries& o) const;

private:
    void normalize();

    std::shared_ptr<const FqField> field_;
    int vmin_ = 0;              // exponent of c_[0]; meaningless when c_ empty
    std::vector<FqElem> c_;     // coefficients from vmin_, leading one nonzero
    int prec_ = 0;
};

// x^p - x
LaurentSeries wp(const LaurentSeries& x);

// The unique x with v(x) >= 1 and wp(x) = a to precision, by the contraction
// x <- x^p - a.  `precision` overrides a's (required when a is exact).
LaurentSeries solve_wp_in_maximal_ideal(const LaurentSeries& a, int precision = -1);

}  // namespace ramlab
