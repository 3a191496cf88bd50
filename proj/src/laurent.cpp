#include <ramlab/laurent.hpp>

#include <algorithm>
#include <stdexcept>

namespace ramlab {

namespace {

// saturating: exact + anything = exact
int prec_add(int a, int b) {
    if (a == LaurentSeries::exact_precision || b == LaurentSeries::exact_precision)
        return LaurentSeries::exact_precision;
    long s = long(a) + long(b);
    if (s >= LaurentSeries::exact_precision) return LaurentSeries::exact_precision;
    if (s < std::numeric_limits<int>::min()) throw std::overflow_error("precision underflow");
    return static_cast<int>(s);
}

}  // namespace

LaurentSeries::LaurentSeries(std::shared_ptr<const FqField> field, int precision)
    : field_(std::move(field)), prec_(precision) {}

void LaurentSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + lead);
        vmin_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    // stored range must sit below the precision
    if (!c_.empty() && prec_ != exact_precision &&
        vmin_ + static_cast<int>(c_.size()) > prec_) {
        long keep = long(prec_) - vmin_;
        c_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
        normalize();
    }
}

LaurentSeries LaurentSeries::monomial(const std::shared_ptr<const FqField>& field,
                                      int exp, const FqElem& c, int precision) {
    LaurentSeries s(field, precision);
    s.vmin_ = exp;
    s.c_ = {c};
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_terms(const std::shared_ptr<const FqField>& field,
                                        const std::vector<std::pair<int, FqElem>>& terms,
                                        int precision) {
    LaurentSeries s(field, precision);
    if (terms.empty()) return s;
    int lo = terms[0].first, hi = terms[0].first;
    for (const auto& [e, _] : terms) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    s.vmin_ = lo;
    s.c_.assign(hi - lo + 1, field->zero());
    for (const auto& [e, cf] : terms) s.c_[e - lo] += cf;
    s.normalize();
    return s;
}

int LaurentSeries::valuation() const {
    if (c_.empty())
        throw std::domain_error("valuation: series is indistinguishable from 0 at "
                                "precision " +
                                (is_exact() ? std::string("oo") : std::to_string(prec_)));
    return vmin_;
}

FqElem LaurentSeries::coeff(int exp) const {
    if (prec_ != exact_precision && exp >= prec_)
        throw std::domain_error("coeff: exponent at or above the precision");
    if (c_.empty() || exp < vmin_ || exp >= vmin_ + static_cast<int>(c_.size()))
        return field_->zero();
    return c_[exp - vmin_];
}

std::vector<std::pair<int, FqElem>> LaurentSeries::terms() const {
    std::vector<std::pair<int, FqElem>> t;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) t.emplace_back(vmin_ + static_cast<int>(i), c_[i]);
    return t;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    LaurentSeries r(field_, std::min(prec_, o.prec_));
    if (c_.empty() && o.c_.empty()) return r;
    int lo = c_.empty() ? o.vmin_ : (o.c_.empty() ? vmin_ : std::min(vmin_, o.vmin_));
    int hi_a = c_.empty() ? lo : vmin_ + static_cast<int>(c_.size());
    int hi_b = o.c_.empty() ? lo : o.vmin_ + static_cast<int>(o.c_.size());
    int hi = std::max(hi_a, hi_b);
    r.vmin_ = lo;
    r.c_.assign(hi - lo, field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[vmin_ - lo + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[o.vmin_ - lo + i] += o.c_[i];
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    return *this + (-o);
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    // effective valuation of a zero-at-precision factor is its precision
    const int va = c_.empty() ? prec_ : vmin_;
    const int vb = o.c_.empty() ? o.prec_ : o.vmin_;
    const int np = std::min(prec_add(prec_, vb), prec_add(o.prec_, va));
    LaurentSeries r(field_, np);
    if (c_.empty() || o.c_.empty()) return r;
    r.vmin_ = va + vb;
    long width;
    if (np == exact_precision)
        width = static_cast<long>(c_.size() + o.c_.size()) - 1;
    else
        width = std::min<long>(static_cast<long>(c_.size() + o.c_.size()) - 1,
                               long(np) - r.vmin_);
    if (width <= 0) return r;
    r.c_.assign(width, field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (static_cast<long>(i + j) >= width) break;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::scaled(const FqElem& c) const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = x * c;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries r = *this;
    r.vmin_ += k;
    r.prec_ = prec_add(r.prec_, k);
    return r;
}

LaurentSeries LaurentSeries::truncated(int precision) const {
    if (precision >= prec_) return *this;
    LaurentSeries r = *this;
    r.prec_ = precision;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::pow(long e) const {
    if (e < 0) throw std::domain_error("LaurentSeries::pow: negative exponent");
    LaurentSeries r = monomial(field_, 0, field_->one());
    LaurentSeries b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

bool LaurentSeries::equals_at_precision(const LaurentSeries& o) const {
    if (prec_ != o.prec_) return false;
    if (c_.empty() || o.c_.empty()) return c_.empty() && o.c_.empty();
    return vmin_ == o.vmin_ && c_ == o.c_;
}

LaurentSeries wp(const LaurentSeries& x) { return x.pow(x.field()->p()) - x; }

LaurentSeries solve_wp_in_maximal_ideal(const LaurentSeries& a, int precision) {
    if (a.known_nonzero() && a.valuation() < 1)
        throw std::domain_error("solve_wp_in_maximal_ideal: need v(a) >= 1");
    int n = precision >= 0 ? precision : a.precision();
    if (n == LaurentSeries::exact_precision)
        throw std::domain_error("solve_wp_in_maximal_ideal: a is exact, pass a target "
                                "precision");
    if (n < 1) throw std::domain_error("solve_wp_in_maximal_ideal: precision must be >= 1");
    LaurentSeries at = a.truncated(n);
    LaurentSeries x(a.field(), n);
    // each round at least p-folds the valuation of the error
    for (int it = 0; it < n + 2; ++it) {
        LaurentSeries next = (x.pow(a.field()->p()) - at).truncated(n);
        if (next.equals_at_precision(x)) return x;
        x = next;
    }
    throw std::logic_error("solve_wp_in_maximal_ideal: iteration failed to converge");
}

}  // namespace ramlab
