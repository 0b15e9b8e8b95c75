#include "foldgate/f2.hpp"

#include <bit>
#include <stdexcept>

namespace foldgate::f2 {

BitVector BitVector::unit(std::size_t n, std::size_t i) {
    BitVector v(n);
    v.set(i, true);
    return v;
}

bool BitVector::none() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

std::size_t BitVector::weight() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::size_t BitVector::overlap(const BitVector& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
}

int BitVector::first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

bool BitVector::operator<(const BitVector& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    // bit-reversed integer comparison so that vectors with earlier set bits sort first
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] != o.w_[i]) {
            std::uint64_t d = w_[i] ^ o.w_[i];
            std::uint64_t low = d & (~d + 1);
            return (o.w_[i] & low) == 0;  // we own the lowest differing bit -> smaller
        }
    }
    return false;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    m.r_ = std::move(rows);
    return m;
}

void BitMatrix::append_row(const BitVector& v) {
    r_.push_back(v);
    ++rows_;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        r_[i].for_each_set([&](std::size_t j) { t.set(j, i, true); });
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    BitMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        r_[i].for_each_set([&](std::size_t j) { out.r_[i] ^= o.r_[j]; });
    return out;
}

BitMatrix operator^(BitMatrix a, const BitMatrix& b) {
    for (std::size_t i = 0; i < a.rows_; ++i) a.r_[i] ^= b.r_[i];
    return a;
}

BitVector BitMatrix::apply_row(const BitVector& v) const {
    BitVector out(cols_);
    v.for_each_set([&](std::size_t j) { out ^= r_[j]; });
    return out;
}

BitMatrix BitMatrix::vstack(const BitMatrix& below) const {
    BitMatrix out = *this;
    for (std::size_t i = 0; i < below.rows(); ++i) out.append_row(below.row(i));
    return out;
}

BitVector Rref::reduce(BitVector v) const {
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (v.get(pivots[i])) v ^= rows.row(i);
    return v;
}

void Rref::insert(const BitVector& v) {
    BitVector red = reduce(v);
    int p = red.first_set();
    if (p < 0) return;
    // keep pivot columns sorted and rows fully reduced
    std::size_t at = 0;
    while (at < pivots.size() && pivots[at] < static_cast<std::size_t>(p)) ++at;
    std::vector<BitVector> rr;
    rr.reserve(pivots.size() + 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) rr.push_back(rows.row(i));
    rr.insert(rr.begin() + at, red);
    pivots.insert(pivots.begin() + at, static_cast<std::size_t>(p));
    for (std::size_t i = 0; i < rr.size(); ++i)
        if (i != at && rr[i].get(static_cast<std::size_t>(p))) rr[i] ^= red;
    rows = BitMatrix::from_rows(std::move(rr), rows.cols());
}

Rref rref(const BitMatrix& m) {
    std::vector<BitVector> work;
    work.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) work.push_back(m.row(i));
    Rref out;
    out.rows = BitMatrix(0, m.cols());
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < work.size(); ++c) {
        std::size_t piv = r;
        while (piv < work.size() && !work[piv].get(c)) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[r], work[piv]);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != r && work[i].get(c)) work[i] ^= work[r];
        out.pivots.push_back(c);
        ++r;
    }
    work.resize(out.pivots.size(), BitVector(m.cols()));
    out.rows = BitMatrix::from_rows(std::move(work), m.cols());
    return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

BitMatrix kernel_basis(const BitMatrix& m) {
    // column-reduce the transpose, tracking the combination in an identity tail
    BitMatrix t = m.transposed();
    std::size_t nc = m.cols();
    std::vector<std::pair<BitVector, BitVector>> aug;
    aug.reserve(nc);
    for (std::size_t c = 0; c < nc; ++c) aug.emplace_back(t.row(c), BitVector::unit(nc, c));
    std::size_t r = 0;
    for (std::size_t bit = 0; bit < m.rows() && r < nc; ++bit) {
        std::size_t piv = r;
        while (piv < nc && !aug[piv].first.get(bit)) ++piv;
        if (piv == nc) continue;
        std::swap(aug[r], aug[piv]);
        for (std::size_t i = 0; i < nc; ++i)
            if (i != r && aug[i].first.get(bit)) {
                aug[i].first ^= aug[r].first;
                aug[i].second ^= aug[r].second;
            }
        ++r;
    }
    BitMatrix out(0, nc);
    for (std::size_t i = r; i < nc; ++i) out.append_row(aug[i].second);
    return out;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length != rows");
    std::vector<std::pair<BitVector, bool>> work;
    work.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) work.emplace_back(m.row(i), b.get(i));
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < work.size(); ++c) {
        std::size_t piv = r;
        while (piv < work.size() && !work[piv].first.get(c)) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[r], work[piv]);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != r && work[i].first.get(c)) {
                work[i].first ^= work[r].first;
                work[i].second = work[i].second != work[r].second;
            }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < work.size(); ++i)
        if (work[i].second) return std::nullopt;
    BitVector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (work[i].second) x.set(pivots[i], true);
    return x;
}

BitMatrix quotient_basis(const BitMatrix& z, const BitMatrix& b) {
    Rref zr = rref(z);
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (!zr.contains(b.row(i)))
            throw std::invalid_argument("quotient_basis: row space of b not contained in row space of z");
    Rref acc = rref(b);
    BitMatrix out(0, z.cols());
    for (std::size_t i = 0; i < zr.rows.rows(); ++i) {
        BitVector red = acc.reduce(zr.rows.row(i));
        if (!red.none()) {
            out.append_row(red);
            acc.insert(red);
        }
    }
    return out;
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    std::vector<std::pair<BitVector, BitVector>> aug;
    aug.reserve(n);
    for (std::size_t i = 0; i < n; ++i) aug.emplace_back(m.row(i), BitVector::unit(n, i));
    std::size_t r = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = r;
        while (piv < n && !aug[piv].first.get(c)) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(aug[r], aug[piv]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != r && aug[i].first.get(c)) {
                aug[i].first ^= aug[r].first;
                aug[i].second ^= aug[r].second;
            }
        ++r;
    }
    BitMatrix inv(0, n);
    for (std::size_t i = 0; i < n; ++i) inv.append_row(aug[i].second);
    return inv;
}

}  // namespace foldgate::f2
