#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

// Arithmetic in k = F_q, q = p^f, as polynomial residues modulo a monic
// irreducible polynomial over F_p.  Fields are immutable once constructed and
// shared by pointer; q is small throughout (exhaustive checks are cheap).

namespace ramlab {

class FqElem;

class FqField : public std::enable_shared_from_this<FqField> {
public:
    // Built-in Conway-style modulus for p in {2,3,5}, f <= 4.
    static std::shared_ptr<const FqField> make(long p, long f);
    // Explicit modulus [c0, ..., c_f], monic, verified irreducible.
    static std::shared_ptr<const FqField> make(long p, std::vector<int> modulus);

    long p() const { return p_; }
    long f() const { return f_; }
    long q() const { return q_; }
    const std::vector<int>& modulus() const { return mod_; }

    FqElem zero() const;
    FqElem one() const;
    FqElem from_int(long c) const;                    // constant in F_p
    FqElem element(std::vector<int> coeffs) const;    // length <= f, reduced mod p
    FqElem element_by_index(long idx) const;          // lexicographic (c0, c1, ...)

    // The first element (lexicographic coefficient order) with trace 1; fixed
    // per field, used as the canonical unramified representative.
    FqElem tau0() const;

private:
    FqField(long p, std::vector<int> modulus);

    long p_, f_, q_;
    std::vector<int> mod_;
    mutable std::once_flag tau0_once_;
    mutable std::vector<int> tau0_coeffs_;
};

class FqElem {
public:
    FqElem() = default;
    FqElem(std::shared_ptr<const FqField> field, std::vector<int> coeffs);

    const std::shared_ptr<const FqField>& field() const { return field_; }
    const std::vector<int>& coeffs() const { return c_; }
    bool is_zero() const;

    FqElem operator+(const FqElem&) const;
    FqElem operator-(const FqElem&) const;
    FqElem operator*(const FqElem&) const;
    FqElem operator-() const;
    FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
    FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
    bool operator==(const FqElem&) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    FqElem pow(long e) const;       // e >= 0
    FqElem inverse() const;         // throws on zero
    FqElem frobenius() const;       // x^p
    FqElem pth_root() const;        // the unique y with y^p = x
    long trace() const;             // S_{k|F_p}(x) in [0, p)

private:
    std::shared_ptr<const FqField> field_;
    std::vector<int> c_;  // length f, entries in [0, p)
};

long fq_trace(const FqElem& x);
FqElem fq_pth_root(const FqElem& x);

}  // namespace ramlab
