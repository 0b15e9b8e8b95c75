#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace foldgate::f2 {

// Dense bit vector over F2. Trailing pad bits beyond size() are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVector& operator^=(const BitVector& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector&) const = default;

    bool none() const;
    std::size_t weight() const;
    std::size_t overlap(const BitVector& o) const;          // |support intersection|
    bool overlap_parity(const BitVector& o) const { return overlap(o) & 1; }
    int first_set() const;                                   // -1 if none

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(wi * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    // total order for deterministic sorting: lowest-index set bit first
    bool operator<(const BitVector& o) const;

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense bit-packed matrix over F2, row-major.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), r_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { r_[i].set(j, v); }
    BitVector& row(std::size_t i) { return r_[i]; }
    const BitVector& row(std::size_t i) const { return r_[i]; }
    void append_row(const BitVector& v);

    BitMatrix transposed() const;
    BitMatrix operator*(const BitMatrix& o) const;
    friend BitMatrix operator^(BitMatrix a, const BitMatrix& b);
    bool operator==(const BitMatrix&) const = default;

    // v * M for a row vector v (right action); v.size() == rows()
    BitVector apply_row(const BitVector& v) const;

    BitMatrix vstack(const BitMatrix& below) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> r_;
};

// Reduced row echelon form with deterministic pivoting
// (leftmost nonzero column, lowest row index first). Zero rows dropped.
struct Rref {
    std::vector<std::size_t> pivots;
    BitMatrix rows;

    // reduce v against the echelon rows; zero result means v is in the span
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).none(); }
    void insert(const BitVector& v);  // extend by an independent vector (no-op if dependent)
};

Rref rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

// basis of the right kernel {v : m v^T = 0}; cols - rank rows
BitMatrix kernel_basis(const BitMatrix& m);

// x with m x^T = b^T, if consistent
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

// rows completing row(b) to a basis of row(z); requires row(b) subset of row(z)
BitMatrix quotient_basis(const BitMatrix& z, const BitMatrix& b);

std::optional<BitMatrix> inverse(const BitMatrix& m);

}  // namespace foldgate::f2
