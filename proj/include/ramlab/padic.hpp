#pragma once

#include <ramlab/bigint.hpp>

#include <memory>
#include <stdexcept>
#include <vector>

// Truncated p-adic and cyclotomic arithmetic: Z[xi]/(Phi_{p^m}) mod p^N,
// absolute norms as multiplication-matrix determinants over Z/p^N, the
// (1-xi)-adic valuation, and the sampled congruence checks for norms of
// p-primary units.

namespace ramlab {

class PadicInt {
public:
    PadicInt(long p, int precision, Int value);

    long p() const { return p_; }
    int precision() const { return N_; }
    const Int& residue() const { return r_; }  // in [0, p^N)

    PadicInt operator+(const PadicInt&) const;
    PadicInt operator-(const PadicInt&) const;
    PadicInt operator*(const PadicInt&) const;
    bool operator==(const PadicInt&) const = default;

    bool is_unit() const { return r_ % p_ != 0; }
    int valuation() const;  // throws when residue is 0 mod p^N
    // x ≡ 1 (mod p^k), k <= N
    bool congruent_one_mod(int k) const;

private:
    long p_;
    int N_;
    Int r_, mod_;
};

class CycloElem;

// The ring Z[xi_m] / p^N with xi_m a primitive p^m-th root of unity,
// represented on the power basis 1, xi, ..., xi^{phi(p^m)-1} modulo
// Phi_{p^m}(T) = sum_{j=0}^{p-1} T^{j p^{m-1}}.
class CycloRing : public std::enable_shared_from_this<CycloRing> {
public:
    static std::shared_ptr<const CycloRing> make(long p, long m, int precision);

    long p() const { return p_; }
    long m() const { return m_; }
    int precision() const { return N_; }
    long phi() const { return phi_; }  // p^{m-1}(p-1)
    const Int& modulus() const { return pN_; }

    std::vector<Int> cyclo_modulus() const;  // coefficients of Phi_{p^m}, degree phi

    CycloElem zero() const;
    CycloElem one() const;
    CycloElem from_int(const Int& c) const;
    CycloElem xi() const;
    CycloElem element(std::vector<Int> coeffs) const;  // length <= phi
    CycloElem one_minus_xi() const;

private:
    CycloRing(long p, long m, int precision);

    long p_, m_, phi_;
    int N_;
    Int pN_;
};

class CycloElem {
public:
    CycloElem() = default;
    CycloElem(std::shared_ptr<const CycloRing> ring, std::vector<Int> coeffs);

    const std::shared_ptr<const CycloRing>& ring() const { return ring_; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const;

    CycloElem operator+(const CycloElem&) const;
    CycloElem operator-(const CycloElem&) const;
    CycloElem operator*(const CycloElem&) const;
    bool operator==(const CycloElem&) const;
    CycloElem pow(Int e) const;

private:
    std::shared_ptr<const CycloRing> ring_;
    std::vector<Int> c_;  // length phi, entries in [0, p^N)
};

// Determinant of the multiplication-by-x matrix on the power basis, computed
// over Z/p^N by unit-pivot elimination; a column with no unit is p-divisible
// and contributes a factor of p up front, so the determinant is always
// defined mod p^N.
PadicInt absolute_norm(const CycloElem& x);

// Valuation with respect to the uniformiser 1 - xi, by repeated exact
// division; each division costs one p of coefficient precision, so the
// working precision bounds the measurable valuation.
int val_pi(const CycloElem& x);

// alpha = (1 + (1-xi)^{p^m} u) gamma^p for seeded pseudorandom u in the ring
// of integers and pseudorandom unit gamma; every such alpha is p-primary.
struct PPrimarySample {
    CycloElem alpha, beta, gamma;
};
PPrimarySample random_p_primary_unit_sample(long p, long m, int precision,
                                            std::uint64_t seed);
CycloElem random_p_primary_unit(long p, long m, int precision, std::uint64_t seed);

struct NormCheckReport {
    long trials = 0;
    long passes = 0;
    std::vector<Int> residues;  // observed norms mod p^{m+2}, informational
    bool ok() const { return passes == trials; }
};

// The p-primary norm congruence N(alpha) ≡ 1 (mod p^{m+1}) on seeded trials.
NormCheckReport pisolkar_check(long p, long m, long trials, int precision,
                               std::uint64_t seed);

// Sampled containment N(o^x) ⊂ V_m: N(gamma) ≡ 1 (mod p^m) for random units,
// and N(gamma^p) ≡ 1 (mod p^{m+1}).
NormCheckReport unit_norm_level_check(long p, long m, long trials, int precision,
                                      std::uint64_t seed);

// phi(p^m) <= 16; the determinant oracle is a desk-scale check.
void norm_guard(long p, long m);

}  // namespace ramlab
