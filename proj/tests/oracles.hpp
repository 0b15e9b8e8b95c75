#pragma once

// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive and share no code with the library implementations.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "foldgate/css.hpp"

namespace oracles {

// plain integer Gaussian elimination
inline std::size_t naive_rank(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

inline std::vector<std::vector<int>> to_ints(const foldgate::f2::BitMatrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.get(i, j);
    return out;
}

// full 2^n enumeration; usable for n <= 20
inline std::optional<std::size_t> naive_css_distance(const foldgate::css::CssCode& code) {
    using foldgate::f2::BitVector;
    std::size_t n = code.n;
    auto in_span = [&](const foldgate::f2::BitMatrix& rows, std::uint32_t v) {
        // naive: try all subset sums when few rows, else eliminate
        std::vector<std::vector<int>> m = to_ints(rows);
        std::vector<int> target(n);
        for (std::size_t j = 0; j < n; ++j) target[j] = (v >> j) & 1;
        m.push_back(target);
        return naive_rank(m) == naive_rank(to_ints(rows));
    };
    std::optional<std::size_t> best;
    for (std::uint32_t v = 1; v < (std::uint32_t(1) << n); ++v) {
        std::size_t w = static_cast<std::size_t>(__builtin_popcount(v));
        if (best && w >= *best) continue;
        auto commutes = [&](const foldgate::f2::BitMatrix& checks) {
            for (std::size_t r = 0; r < checks.rows(); ++r) {
                int par = 0;
                for (std::size_t j = 0; j < n; ++j)
                    if (((v >> j) & 1) && checks.get(r, j)) par ^= 1;
                if (par) return false;
            }
            return true;
        };
        if ((commutes(code.hx) && !in_span(code.hz, v)) ||
            (commutes(code.hz) && !in_span(code.hx, v)))
            best = w;
    }
    return best;
}

// all Tanner-graph symmetries by brute force over qubit permutations (n <= 8):
// returns (#automorphisms, #full ZX swaps)
inline std::pair<std::size_t, std::size_t> brute_census(const foldgate::css::CssCode& code) {
    std::size_t n = code.n;
    auto row_set = [&](const foldgate::f2::BitMatrix& h, const std::vector<std::size_t>& perm) {
        std::multiset<std::vector<int>> s;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            std::vector<int> supp;
            for (std::size_t j = 0; j < n; ++j)
                if (h.get(i, j)) supp.push_back(static_cast<int>(perm[j]));
            std::sort(supp.begin(), supp.end());
            s.insert(supp);
        }
        return s;
    };
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    auto xset = row_set(code.hx, perm), zset = row_set(code.hz, perm);
    std::size_t autos = 0, swaps = 0;
    do {
        auto xi = row_set(code.hx, perm);
        auto zi = row_set(code.hz, perm);
        if (xi == xset && zi == zset) ++autos;
        if (xi == zset && zi == xset) ++swaps;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {autos, swaps};
}

// naive closure of a matrix group given by generator list; throws on cap
inline std::size_t naive_matrix_group_order(const std::vector<foldgate::f2::BitMatrix>& gens,
                                            std::size_t cap = 200000) {
    using foldgate::f2::BitMatrix;
    auto key = [](const BitMatrix& m) {
        std::vector<std::uint64_t> k;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (auto w : m.row(i).words()) k.push_back(w);
        return k;
    };
    if (gens.empty()) return 1;
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<BitMatrix> frontier{BitMatrix::identity(gens[0].rows())};
    seen.insert(key(frontier[0]));
    while (!frontier.empty()) {
        BitMatrix g = frontier.back();
        frontier.pop_back();
        for (const auto& h : gens) {
            BitMatrix x = g * h;
            if (seen.insert(key(x)).second) {
                frontier.push_back(x);
                if (seen.size() > cap) throw std::runtime_error("naive closure cap");
            }
        }
    }
    return seen.size();
}

// naive closure of a permutation group
inline std::size_t naive_perm_group_order(const std::vector<std::vector<std::uint32_t>>& gens,
                                          std::size_t cap = 200000) {
    if (gens.empty()) return 1;
    std::vector<std::uint32_t> id(gens[0].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint32_t>(i);
    std::set<std::vector<std::uint32_t>> seen{id};
    std::vector<std::vector<std::uint32_t>> frontier{id};
    while (!frontier.empty()) {
        auto g = frontier.back();
        frontier.pop_back();
        for (const auto& h : gens) {
            std::vector<std::uint32_t> x(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) x[i] = h[g[i]];
            if (seen.insert(x).second) {
                frontier.push_back(x);
                if (seen.size() > cap) throw std::runtime_error("naive closure cap");
            }
        }
    }
    return seen.size();
}

}  // namespace oracles
