#include <ramlab/fpflag.hpp>

#include <algorithm>
#include <numeric>

namespace ramlab {

FpMatrix::FpMatrix(long p, size_t rows, size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!is_prime(p)) throw std::invalid_argument("FpMatrix: p must be prime");
}

void FpMatrix::set(size_t r, size_t c, long v) {
    long m = v % p_;
    if (m < 0) m += p_;
    a_[r * cols_ + c] = static_cast<int>(m);
}

void FpMatrix::append_row(const std::vector<int>& row) {
    if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    ++rows_;
    a_.resize(rows_ * cols_);
    for (size_t c = 0; c < cols_; ++c) set(rows_ - 1, c, row[c]);
}

namespace {

long inv_mod(long a, long p) {
    // p prime, a != 0 mod p
    long r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

size_t FpMatrix::rref() {
    size_t lead = 0;
    for (size_t c = 0; c < cols_ && lead < rows_; ++c) {
        size_t piv = lead;
        while (piv < rows_ && at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        for (size_t k = 0; k < cols_; ++k)
            std::swap(a_[lead * cols_ + k], a_[piv * cols_ + k]);
        const long inv = inv_mod(at(lead, c), p_);
        for (size_t k = c; k < cols_; ++k) set(lead, k, at(lead, k) * inv);
        for (size_t r = 0; r < rows_; ++r) {
            if (r == lead || at(r, c) == 0) continue;
            const long coef = at(r, c);
            for (size_t k = c; k < cols_; ++k)
                set(r, k, at(r, k) - coef * at(lead, k));
        }
        ++lead;
    }
    return lead;
}

std::vector<size_t> FpMatrix::pivot_columns() const {
    std::vector<size_t> piv;
    for (size_t r = 0; r < rows_; ++r) {
        size_t c = 0;
        while (c < cols_ && at(r, c) == 0) ++c;
        if (c == cols_) break;
        piv.push_back(c);
    }
    return piv;
}

size_t rank(FpMatrix m) { return m.rref(); }

FlagSpace::FlagSpace(long p_, size_t ambient_, std::vector<size_t> dims_)
    : p(p_), ambient(ambient_), dims(std::move(dims_)) {
    for (size_t j = 0; j < dims.size(); ++j) {
        if (dims[j] > ambient || (j > 0 && dims[j] < dims[j - 1]))
            throw std::invalid_argument("FlagSpace: chain dims must be weakly "
                                        "increasing and bounded by the ambient dim");
    }
}

void guard_enumeration(long p, size_t ambient) {
    Int total = int_pow(Int(p), static_cast<long>(ambient));
    if (total > (Int(1) << 20))
        throw std::domain_error("enumeration guard exceeded: p^D > 2^20");
}

SubspaceEnumerator::SubspaceEnumerator(long p, size_t ambient, size_t dim)
    : p_(p), ambient_(ambient), dim_(dim) {
    guard_enumeration(p, ambient);
    if (dim > ambient) {
        done_ = true;
        return;
    }
    pivots_.resize(dim);
    std::iota(pivots_.begin(), pivots_.end(), size_t{0});
    reset_free_slots();
}

void SubspaceEnumerator::reset_free_slots() {
    // RREF free entries: row r may be nonzero at non-pivot columns right of
    // its own pivot.
    free_slots_.clear();
    for (size_t r = 0; r < dim_; ++r)
        for (size_t c = pivots_[r] + 1; c < ambient_; ++c)
            if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end())
                free_slots_.push_back(r * ambient_ + c);
    free_vals_.assign(free_slots_.size(), 0);
}

bool SubspaceEnumerator::advance_free() {
    for (size_t i = 0; i < free_vals_.size(); ++i) {
        if (++free_vals_[i] < p_) return true;
        free_vals_[i] = 0;
    }
    return false;
}

bool SubspaceEnumerator::advance_pivots() {
    // next combination of dim_ pivot columns out of [0, ambient_)
    size_t i = dim_;
    while (i-- > 0) {
        if (pivots_[i] < ambient_ - (dim_ - i)) {
            ++pivots_[i];
            for (size_t j = i + 1; j < dim_; ++j) pivots_[j] = pivots_[j - 1] + 1;
            reset_free_slots();
            return true;
        }
    }
    return false;
}

void SubspaceEnumerator::emit(FpMatrix& out) const {
    out = FpMatrix(p_, dim_, ambient_);
    for (size_t r = 0; r < dim_; ++r) out.set(r, pivots_[r], 1);
    for (size_t i = 0; i < free_slots_.size(); ++i)
        out.set(free_slots_[i] / ambient_, free_slots_[i] % ambient_, free_vals_[i]);
}

bool SubspaceEnumerator::next(FpMatrix& out) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        emit(out);
        return true;
    }
    if (advance_free()) {
        emit(out);
        return true;
    }
    if (advance_pivots()) {
        emit(out);
        return true;
    }
    done_ = true;
    return false;
}

Int count_subspaces(long p, size_t ambient, size_t dim) {
    SubspaceEnumerator en(p, ambient, dim);
    FpMatrix m(p, 0, ambient);
    Int n = 0;
    while (en.next(m)) ++n;
    return n;
}

Int gaussian_binomial(long p, size_t ambient, size_t dim) {
    if (dim > ambient) return 0;
    Int num = 1, den = 1;
    for (size_t i = 0; i < dim; ++i) {
        num *= int_pow(Int(p), static_cast<long>(ambient - i)) - 1;
        den *= int_pow(Int(p), static_cast<long>(dim - i)) - 1;
    }
    return exact_div(num, den);
}

namespace {

// A line (RREF 1 x D) lies in the span of the first d coordinates iff all
// entries from column d on vanish.
bool line_in_prefix(const FpMatrix& line, size_t d) {
    for (size_t c = d; c < line.cols(); ++c)
        if (line.at(0, c) != 0) return false;
    return true;
}

}  // namespace

Int count_lines_at_level(const FlagSpace& space, size_t level) {
    if (level >= space.dims.size())
        throw std::invalid_argument("count_lines_at_level: level out of range");
    guard_enumeration(space.p, space.ambient);
    const size_t d_hi = space.dims[level];
    const size_t d_lo = level == 0 ? 0 : space.dims[level - 1];
    SubspaceEnumerator en(space.p, space.ambient, 1);
    FpMatrix line(space.p, 0, space.ambient);
    Int n = 0;
    while (en.next(line))
        if (line_in_prefix(line, d_hi) && !line_in_prefix(line, d_lo)) ++n;
    return n;
}

Int count_with_profile(const FlagSpace& space, const std::vector<size_t>& profile) {
    if (profile.size() != space.dims.size())
        throw std::invalid_argument("count_with_profile: profile length must match "
                                    "the chain length");
    guard_enumeration(space.p, space.ambient);
    const size_t dim_d = profile.back();
    SubspaceEnumerator en(space.p, space.ambient, dim_d);
    FpMatrix sub(space.p, 0, space.ambient);
    Int n = 0;
    while (en.next(sub)) {
        bool ok = true;
        for (size_t j = 0; j < space.dims.size() && ok; ++j) {
            // dim(D ∩ W_j) = dim D + dim W_j - dim(D + W_j)
            FpMatrix stacked = sub;
            std::vector<int> unit(space.ambient, 0);
            for (size_t c = 0; c < space.dims[j]; ++c) {
                unit.assign(space.ambient, 0);
                unit[c] = 1;
                stacked.append_row(unit);
            }
            const size_t dim_sum = rank(stacked);
            const size_t inter = dim_d + space.dims[j] - dim_sum;
            if (inter != profile[j]) ok = false;
        }
        if (ok) ++n;
    }
    return n;
}

}  // namespace ramlab
