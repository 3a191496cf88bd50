#include <ramlab/padic.hpp>

#include <algorithm>
#include <cstdint>
#include <random>

namespace ramlab {

namespace {

Int mod_reduce(Int v, const Int& m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

// inverse of a unit modulo p^k (extended Euclid)
Int inv_mod(const Int& a, const Int& m) {
    Int old_r = mod_reduce(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("inv_mod: not a unit");
    return mod_reduce(old_s, m);
}

}  // namespace

PadicInt::PadicInt(long p, int precision, Int value) : p_(p), N_(precision) {
    if (!is_prime(p)) throw std::invalid_argument("PadicInt: p must be prime");
    if (precision < 1) throw std::invalid_argument("PadicInt: precision must be >= 1");
    mod_ = int_pow(Int(p), precision);
    r_ = mod_reduce(std::move(value), mod_);
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
    return PadicInt(p_, std::min(N_, o.N_), r_ + o.r_);
}
PadicInt PadicInt::operator-(const PadicInt& o) const {
    return PadicInt(p_, std::min(N_, o.N_), r_ - o.r_);
}
PadicInt PadicInt::operator*(const PadicInt& o) const {
    return PadicInt(p_, std::min(N_, o.N_), r_ * o.r_);
}

int PadicInt::valuation() const {
    if (r_ == 0)
        throw std::domain_error("PadicInt::valuation: 0 mod p^N, need more precision");
    Int v = r_;
    int k = 0;
    while (v % p_ == 0) {
        v /= p_;
        ++k;
    }
    return k;
}

bool PadicInt::congruent_one_mod(int k) const {
    if (k > N_)
        throw std::domain_error("congruent_one_mod: asking below the precision");
    return mod_reduce(r_ - 1, int_pow(Int(p_), k)) == 0;
}

CycloRing::CycloRing(long p, long m, int precision) : p_(p), m_(m), N_(precision) {
    if (!is_prime(p)) throw std::invalid_argument("CycloRing: p must be prime");
    if (m < 1) throw std::invalid_argument("CycloRing: m must be >= 1");
    if (precision < 1) throw std::invalid_argument("CycloRing: precision must be >= 1");
    phi_ = (p - 1);
    for (long i = 1; i < m; ++i) {
        phi_ *= p;
        if (phi_ > (1L << 20))
            throw std::invalid_argument("CycloRing: phi(p^m) too large");
    }
    pN_ = int_pow(Int(p), precision);
}

std::shared_ptr<const CycloRing> CycloRing::make(long p, long m, int precision) {
    return std::shared_ptr<const CycloRing>(new CycloRing(p, m, precision));
}

std::vector<Int> CycloRing::cyclo_modulus() const {
    std::vector<Int> c(phi_ + 1, 0);
    long step = phi_ / (p_ - 1);  // p^{m-1}
    for (long j = 0; j < p_; ++j) c[j * step] = 1;
    return c;
}

CycloElem CycloRing::zero() const {
    return CycloElem(shared_from_this(), std::vector<Int>(phi_, 0));
}
CycloElem CycloRing::one() const { return from_int(1); }

CycloElem CycloRing::from_int(const Int& c) const {
    std::vector<Int> v(phi_, 0);
    v[0] = c;
    return CycloElem(shared_from_this(), std::move(v));
}

CycloElem CycloRing::xi() const {
    std::vector<Int> v(phi_, 0);
    if (phi_ == 1)
        v[0] = pN_ - 1;  // p = 2, m = 1: xi = -1
    else
        v[1] = 1;
    return CycloElem(shared_from_this(), std::move(v));
}

CycloElem CycloRing::element(std::vector<Int> coeffs) const {
    if (static_cast<long>(coeffs.size()) > phi_)
        throw std::invalid_argument("CycloRing::element: too many coefficients");
    coeffs.resize(phi_, 0);
    return CycloElem(shared_from_this(), std::move(coeffs));
}

CycloElem CycloRing::one_minus_xi() const { return one() - xi(); }

CycloElem::CycloElem(std::shared_ptr<const CycloRing> ring, std::vector<Int> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
    for (auto& x : c_) x = mod_reduce(std::move(x), ring_->modulus());
}

bool CycloElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    std::vector<Int> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] + o.c_[i];
    return CycloElem(ring_, std::move(v));
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
    std::vector<Int> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] - o.c_[i];
    return CycloElem(ring_, std::move(v));
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    const long phi = ring_->phi();
    const long step = phi / (ring_->p() - 1);  // p^{m-1}
    std::vector<Int> prod(2 * phi - 1, 0);
    for (long i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    // T^phi = -(1 + T^step + ... + T^{(p-2) step}), applied top down
    for (long d = 2 * phi - 2; d >= phi; --d) {
        const Int coef = prod[d];
        if (coef == 0) continue;
        prod[d] = 0;
        for (long j = 0; j <= ring_->p() - 2; ++j) prod[d - phi + j * step] -= coef;
    }
    prod.resize(phi);
    return CycloElem(ring_, std::move(prod));
}

bool CycloElem::operator==(const CycloElem& o) const { return c_ == o.c_; }

CycloElem CycloElem::pow(Int e) const {
    if (e < 0) throw std::domain_error("CycloElem::pow: negative exponent");
    CycloElem r = ring_->one(), b = *this;
    while (e > 0) {
        if ((e & 1) != 0) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

PadicInt absolute_norm(const CycloElem& x) {
    const auto& ring = x.ring();
    const long n = ring->phi();
    const long p = ring->p();
    const int N = ring->precision();

    // columns: coordinates of x * xi^i
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    CycloElem col = x;
    for (long i = 0; i < n; ++i) {
        for (long r = 0; r < n; ++r) a[r][i] = col.coeffs()[r];
        if (i + 1 < n) col = col * ring->xi();
    }

    Int cur_mod = ring->modulus();
    int pexp = 0;
    Int det = 1;
    bool negate = false;
    for (long c = 0; c < n; ++c) {
        for (;;) {
            long piv = -1;
            for (long r = c; r < n; ++r)
                if (a[r][c] % p != 0) {
                    piv = r;
                    break;
                }
            if (piv >= 0) {
                if (piv != c) {
                    std::swap(a[piv], a[c]);
                    negate = !negate;
                }
                break;
            }
            // whole column below is divisible by p: factor it out, at the
            // cost of one p of working precision
            ++pexp;
            if (pexp >= N) return PadicInt(p, N, 0);  // det ≡ 0 mod p^N
            cur_mod /= p;
            for (long r = c; r < n; ++r) {
                a[r][c] /= p;
                a[r][c] = mod_reduce(a[r][c], cur_mod);
            }
        }
        const Int inv = inv_mod(a[c][c], cur_mod);
        for (long r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const Int factor = mod_reduce(a[r][c] * inv, cur_mod);
            for (long k = c; k < n; ++k)
                a[r][k] = mod_reduce(a[r][k] - factor * a[c][k], cur_mod);
        }
        det = mod_reduce(det * a[c][c], cur_mod);
    }
    if (negate) det = mod_reduce(-det, cur_mod);
    // det = p^pexp * unit-part; the unit part mod p^{N-pexp} pins the
    // determinant mod p^N exactly
    return PadicInt(p, N, det * int_pow(Int(p), pexp));
}

int val_pi(const CycloElem& x) {
    const auto& ring = x.ring();
    const long p = ring->p();
    // C = prod over the other units j of (1 - xi^j); (1 - xi) C = p
    CycloElem c_factor = ring->one();
    const long pm = static_cast<long>(int_pow(Int(p), ring->m()).convert_to<long>());
    for (long j = 2; j < pm; ++j) {
        if (j % p == 0) continue;
        c_factor = c_factor * (ring->one() - ring->xi().pow(j));
    }

    std::vector<Int> cur = x.coeffs();
    int remaining = ring->precision();
    Int cur_mod = ring->modulus();
    int v = 0;
    for (;;) {
        if (std::all_of(cur.begin(), cur.end(), [](const Int& t) { return t == 0; }))
            throw std::domain_error("val_pi: indistinguishable from 0 at the working "
                                    "precision; increase it");
        // residue map o -> F_p sends xi to 1: x in (1-xi) iff x(1) ≡ 0 mod p
        Int at_one = 0;
        for (const auto& t : cur) at_one += t;
        if (at_one % p != 0) return v;
        if (remaining <= 1)
            throw std::domain_error("val_pi: precision exhausted; increase it");
        // divide by (1 - xi): multiply by C, then divide the coefficients by p
        CycloElem z = CycloElem(ring, cur) * c_factor;
        cur = z.coeffs();
        --remaining;
        cur_mod /= p;
        for (auto& t : cur) {
            if (t % p != 0)
                throw std::logic_error("val_pi: division by (1 - xi) not exact");
            t /= p;
            t = mod_reduce(t, cur_mod);
        }
        ++v;
    }
}

namespace {

// deterministic, platform-independent big integer draw in [0, bound)
Int draw_int(std::mt19937_64& rng, const Int& bound) {
    Int acc = 0;
    int bits = 0;
    while (bits < static_cast<int>(boost::multiprecision::msb(bound)) + 65) {
        acc = (acc << 64) | Int(rng());
        bits += 64;
    }
    return mod_reduce(acc, bound);
}

CycloElem draw_elem(std::mt19937_64& rng, const std::shared_ptr<const CycloRing>& ring) {
    std::vector<Int> v(ring->phi());
    for (auto& t : v) t = draw_int(rng, ring->modulus());
    return CycloElem(ring, std::move(v));
}

CycloElem draw_unit(std::mt19937_64& rng, const std::shared_ptr<const CycloRing>& ring) {
    for (;;) {
        CycloElem g = draw_elem(rng, ring);
        Int at_one = 0;
        for (const auto& t : g.coeffs()) at_one += t;
        if (at_one % ring->p() != 0) return g;
    }
}

}  // namespace

void norm_guard(long p, long m) {
    long phi = p - 1;
    for (long i = 1; i < m; ++i) {
        phi *= p;
        if (phi > 16) break;
    }
    if (phi > 16)
        throw std::domain_error("norm guard exceeded: phi(p^m) must be <= 16");
}

PPrimarySample random_p_primary_unit_sample(long p, long m, int precision,
                                            std::uint64_t seed) {
    if (precision < m + 2)
        throw std::domain_error("random_p_primary_unit: precision must be >= m+2");
    auto ring = CycloRing::make(p, m, precision);
    std::mt19937_64 rng(seed);
    const CycloElem u = draw_elem(rng, ring);
    const CycloElem gamma = draw_unit(rng, ring);
    const Int pm = int_pow(Int(p), m);
    PPrimarySample s;
    s.gamma = gamma;
    s.beta = ring->one() + ring->one_minus_xi().pow(pm) * u;
    s.alpha = s.beta * gamma.pow(p);
    return s;
}

CycloElem random_p_primary_unit(long p, long m, int precision, std::uint64_t seed) {
    return random_p_primary_unit_sample(p, m, precision, seed).alpha;
}

NormCheckReport pisolkar_check(long p, long m, long trials, int precision,
                               std::uint64_t seed) {
    norm_guard(p, m);
    if (precision < m + 2)
        throw std::domain_error("pisolkar_check: precision must be >= m+2");
    NormCheckReport rep;
    const Int pm2 = int_pow(Int(p), m + 2);
    for (long t = 0; t < trials; ++t) {
        const CycloElem alpha = random_p_primary_unit(p, m, precision, seed + t);
        const PadicInt norm = absolute_norm(alpha);
        ++rep.trials;
        if (norm.congruent_one_mod(static_cast<int>(m) + 1)) ++rep.passes;
        rep.residues.push_back(mod_reduce(norm.residue(), pm2));
    }
    return rep;
}

NormCheckReport unit_norm_level_check(long p, long m, long trials, int precision,
                                      std::uint64_t seed) {
    norm_guard(p, m);
    if (precision < m + 2)
        throw std::domain_error("unit_norm_level_check: precision must be >= m+2");
    auto ring = CycloRing::make(p, m, precision);
    std::mt19937_64 rng(seed);
    NormCheckReport rep;
    const Int pm2 = int_pow(Int(p), m + 2);
    for (long t = 0; t < trials; ++t) {
        const CycloElem gamma = draw_unit(rng, ring);
        const PadicInt n = absolute_norm(gamma);
        const PadicInt np = absolute_norm(gamma.pow(p));
        ++rep.trials;
        if (n.congruent_one_mod(static_cast<int>(m)) &&
            np.congruent_one_mod(static_cast<int>(m) + 1))
            ++rep.passes;
        rep.residues.push_back(mod_reduce(n.residue(), pm2));
    }
    return rep;
}

}  // namespace ramlab
