#pragma once

#include <ramlab/bigint.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

// Linear algebra over F_p on coordinate vectors and flags: ranks, reduced row
// echelon forms, exhaustive subspace enumeration and profile counting.  This
// is the brute-force oracle layer; enumeration carries a hard guard.

namespace ramlab {

class FpMatrix {
public:
    FpMatrix(long p, size_t rows, size_t cols);

    long p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    int at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, long v);

    void append_row(const std::vector<int>& row);

    // In-place reduced row echelon form; returns the rank.  Pivot columns of
    // the nonzero rows come out strictly increasing.
    size_t rref();
    std::vector<size_t> pivot_columns() const;  // valid after rref()

    bool operator==(const FpMatrix&) const = default;

private:
    long p_;
    size_t rows_, cols_;
    std::vector<int> a_;
};

size_t rank(FpMatrix m);  // by value: ranks a copy

// A nested chain of coordinate subspaces of F_p^D: member j is the span of
// the first dims[j] coordinates, 0 <= dims[0] <= ... <= D.
struct FlagSpace {
    long p;
    size_t ambient;
    std::vector<size_t> dims;

    FlagSpace(long p_, size_t ambient_, std::vector<size_t> dims_);
};

// Yields every dim-dimensional subspace of F_p^D exactly once, as its
// canonical RREF basis matrix.  Single-consumer; independent instances may
// run in parallel.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(long p, size_t ambient, size_t dim);
    SubspaceEnumerator(const FlagSpace& space, size_t dim)
        : SubspaceEnumerator(space.p, space.ambient, dim) {}
    bool next(FpMatrix& out);

private:
    void reset_free_slots();
    bool advance_free();
    bool advance_pivots();
    void emit(FpMatrix& out) const;

    long p_;
    size_t ambient_, dim_;
    bool done_ = false, first_ = true;
    std::vector<size_t> pivots_;     // strictly increasing pivot columns
    std::vector<size_t> free_slots_;  // (row, col) pairs flattened
    std::vector<int> free_vals_;
};

void guard_enumeration(long p, size_t ambient);  // throws past p^D > 2^20

Int count_subspaces(long p, size_t ambient, size_t dim);  // by enumeration

// Gaussian binomial [D choose k]_p, the independent closed-form count.
Int gaussian_binomial(long p, size_t ambient, size_t dim);

// Lines contained in chain member `level` but in no smaller member, counted
// by enumeration (level indexes `dims`, level >= 1 compares against
// level - 1; level 0 counts lines of member 0).
Int count_lines_at_level(const FlagSpace& space, size_t level);

// Exhaustive count of subspaces D with dim(D ∩ member_j) == profile[j] for
// every chain member.  profile.back() is the dimension of D itself when the
// last member is the ambient space.
Int count_with_profile(const FlagSpace& space, const std::vector<size_t>& profile);

}  // namespace ramlab
