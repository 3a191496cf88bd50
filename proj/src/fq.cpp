#include <ramlab/fq.hpp>

#include <ramlab/bigint.hpp>

#include <algorithm>
#include <map>
#include <string>

namespace ramlab {

namespace {

using Poly = std::vector<int>;  // coefficients mod p, low degree first

int norm_mod(long v, long p) {
    long m = v % p;
    if (m < 0) m += p;
    return static_cast<int>(m);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = norm_mod(c[i + j] + long(a[i]) * b[j], p);
    trim(c);
    return c;
}

// remainder of a modulo monic m
Poly poly_rem(Poly a, const Poly& m, long p) {
    trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const int lead = a.back();
        const size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (size_t i = 0; i < m.size(); ++i)
                a[shift + i] = norm_mod(a[shift + i] - long(lead) * m[i], p);
        a.pop_back();
        trim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

bool poly_divides(const Poly& d, const Poly& a, long p) {
    Poly r = poly_rem(a, d, p);
    return r.empty();
}

bool is_irreducible(const Poly& m, long p) {
    const size_t deg = m.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // exhaustive: no monic factor of degree in [1, deg/2]; q is small
    for (size_t d = 1; d <= deg / 2; ++d) {
        long count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            long t = idx;
            for (size_t i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_divides(g, m, p)) return false;
        }
    }
    return true;
}

const std::map<std::pair<long, long>, Poly>& builtin_moduli() {
    static const std::map<std::pair<long, long>, Poly> table = {
        {{2, 1}, {1, 1}},          {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
        {{3, 1}, {1, 1}},          {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 1}, {3, 1}},          {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
    };
    return table;
}

}  // namespace

FqField::FqField(long p, std::vector<int> modulus) : p_(p), mod_(std::move(modulus)) {
    if (!is_prime(p)) throw std::invalid_argument("FqField: p must be prime");
    for (auto& c : mod_) c = norm_mod(c, p);
    if (mod_.size() < 2 || mod_.back() != 1)
        throw std::invalid_argument("FqField: modulus must be monic of degree >= 1");
    f_ = static_cast<long>(mod_.size()) - 1;
    q_ = 1;
    for (long i = 0; i < f_; ++i) {
        q_ *= p;
        if (q_ > (1L << 24)) throw std::invalid_argument("FqField: q too large");
    }
    if (!is_irreducible(mod_, p))
        throw std::invalid_argument("FqField: modulus is reducible over F_p");
}

std::shared_ptr<const FqField> FqField::make(long p, long f) {
    auto it = builtin_moduli().find({p, f});
    if (it == builtin_moduli().end())
        throw std::invalid_argument("no built-in modulus for p=" + std::to_string(p) +
                                    ", f=" + std::to_string(f) +
                                    "; supply one explicitly");
    return make(p, it->second);
}

std::shared_ptr<const FqField> FqField::make(long p, std::vector<int> modulus) {
    return std::shared_ptr<const FqField>(new FqField(p, std::move(modulus)));
}

FqElem FqField::zero() const {
    return FqElem(shared_from_this(), std::vector<int>(f_, 0));
}

FqElem FqField::one() const { return from_int(1); }

FqElem FqField::from_int(long c) const {
    std::vector<int> v(f_, 0);
    v[0] = norm_mod(c, p_);
    return FqElem(shared_from_this(), v);
}

FqElem FqField::element(std::vector<int> coeffs) const {
    if (static_cast<long>(coeffs.size()) > f_)
        throw std::invalid_argument("FqField::element: too many coefficients");
    coeffs.resize(f_, 0);
    for (auto& c : coeffs) c = norm_mod(c, p_);
    return FqElem(shared_from_this(), std::move(coeffs));
}

FqElem FqField::element_by_index(long idx) const {
    std::vector<int> v(f_, 0);
    // lexicographic coefficient order: c0 varies slowest
    for (long i = f_ - 1; i >= 0; --i) {
        v[i] = static_cast<int>(idx % p_);
        idx /= p_;
    }
    return FqElem(shared_from_this(), v);
}

FqElem FqField::tau0() const {
    // The trace is surjective onto F_p, so the scan always terminates; the
    // result is cached on first use and the field is immutable afterwards.
    std::call_once(tau0_once_, [this] {
        for (long idx = 0; idx < q_; ++idx) {
            FqElem x = element_by_index(idx);
            if (x.trace() == 1) {
                tau0_coeffs_ = x.coeffs();
                return;
            }
        }
        throw std::logic_error("FqField::tau0: no trace-1 element found");
    });
    return FqElem(shared_from_this(), tau0_coeffs_);
}

FqElem::FqElem(std::shared_ptr<const FqField> field, std::vector<int> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {}

bool FqElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

FqElem FqElem::operator+(const FqElem& o) const {
    std::vector<int> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = norm_mod(c_[i] + o.c_[i], field_->p());
    return FqElem(field_, std::move(v));
}

FqElem FqElem::operator-(const FqElem& o) const {
    std::vector<int> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = norm_mod(c_[i] - o.c_[i], field_->p());
    return FqElem(field_, std::move(v));
}

FqElem FqElem::operator-() const {
    std::vector<int> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = norm_mod(-c_[i], field_->p());
    return FqElem(field_, std::move(v));
}

FqElem FqElem::operator*(const FqElem& o) const {
    Poly prod = poly_mul(c_, o.c_, field_->p());
    Poly red = poly_rem(std::move(prod), field_->modulus(), field_->p());
    red.resize(field_->f(), 0);
    return FqElem(field_, std::move(red));
}

bool FqElem::operator==(const FqElem& o) const { return c_ == o.c_; }

FqElem FqElem::pow(long e) const {
    if (e < 0) throw std::domain_error("FqElem::pow: negative exponent");
    FqElem r = field_->one(), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FqElem FqElem::inverse() const {
    if (is_zero()) throw std::domain_error("FqElem::inverse: zero");
    return pow(field_->q() - 2);
}

FqElem FqElem::frobenius() const { return pow(field_->p()); }

FqElem FqElem::pth_root() const {
    // Frobenius has order f, so x^{p^{f-1}} is the inverse of x -> x^p.
    FqElem r = *this;
    for (long i = 0; i < field_->f() - 1; ++i) r = r.frobenius();
    return r;
}

long FqElem::trace() const {
    FqElem s = field_->zero(), x = *this;
    for (long i = 0; i < field_->f(); ++i) {
        s += x;
        x = x.frobenius();
    }
    // the trace lands in F_p
    for (size_t i = 1; i < s.coeffs().size(); ++i)
        if (s.coeffs()[i] != 0)
            throw std::logic_error("FqElem::trace: value not in the prime field");
    return s.coeffs().empty() ? 0 : s.coeffs()[0];
}

long fq_trace(const FqElem& x) { return x.trace(); }
FqElem fq_pth_root(const FqElem& x) { return x.pth_root(); }

}  // namespace ramlab
