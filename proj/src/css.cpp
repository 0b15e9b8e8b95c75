#include "foldgate/css.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace foldgate::css {

ValidationReport validate(const CssCode& code) {
    ValidationReport rep;
    if (code.hx.cols() != code.n || code.hz.cols() != code.n) {
        rep.ok = false;
        return rep;
    }
    for (std::size_t i = 0; i < code.hx.rows(); ++i)
        for (std::size_t j = 0; j < code.hz.rows(); ++j)
            if (code.hx.row(i).overlap_parity(code.hz.row(j))) {
                rep.ok = false;
                rep.violations.emplace_back(i, j);
            }
    return rep;
}

void require_valid(const CssCode& code) {
    auto rep = validate(code);
    if (rep.ok) return;
    std::ostringstream os;
    os << "invalid CSS code";
    if (!code.label.empty()) os << " '" << code.label << "'";
    os << ": " << rep.violations.size() << " anticommuting check pair(s)";
    if (!rep.violations.empty())
        os << ", first at (X" << rep.violations[0].first << ", Z" << rep.violations[0].second << ")";
    throw std::invalid_argument(os.str());
}

std::size_t logical_count(const CssCode& code) {
    return code.n - f2::rank(code.hx) - f2::rank(code.hz);
}

LogicalBasis logical_bases(const CssCode& code) {
    require_valid(code);
    LogicalBasis b;
    b.zbasis = f2::quotient_basis(f2::kernel_basis(code.hx), code.hz);
    b.xbasis = f2::quotient_basis(f2::kernel_basis(code.hz), code.hx);
    return b;
}

GramMatrix gram(const CssCode& code, const LogicalBasis& basis) {
    (void)code;
    std::size_t k = basis.k();
    BitMatrix phi(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            phi.set(i, j, basis.xbasis.row(i).overlap_parity(basis.zbasis.row(j)));
    return phi;
}

bool basis_valid(const CssCode& code, const LogicalBasis& basis) {
    if (basis.zbasis.rows() != basis.xbasis.rows()) return false;
    auto zr = f2::rref(code.hz);
    auto xr = f2::rref(code.hx);
    for (std::size_t i = 0; i < basis.zbasis.rows(); ++i) {
        const auto& z = basis.zbasis.row(i);
        for (std::size_t r = 0; r < code.hx.rows(); ++r)
            if (code.hx.row(r).overlap_parity(z)) return false;
        if (zr.contains(z)) return false;
        const auto& x = basis.xbasis.row(i);
        for (std::size_t r = 0; r < code.hz.rows(); ++r)
            if (code.hz.row(r).overlap_parity(x)) return false;
        if (xr.contains(x)) return false;
    }
    // independence mod boundaries, both sectors
    if (f2::rank(basis.zbasis.vstack(code.hz)) != basis.k() + f2::rank(code.hz)) return false;
    if (f2::rank(basis.xbasis.vstack(code.hx)) != basis.k() + f2::rank(code.hx)) return false;
    return true;
}

LogicalBasis symplectify(const CssCode& code, const LogicalBasis& basis) {
    GramMatrix phi = gram(code, basis);
    auto inv = f2::inverse(phi);
    if (!inv) throw std::logic_error("symplectify: singular Gram matrix (basis is not valid)");
    LogicalBasis out;
    out.zbasis = basis.zbasis;
    out.xbasis = *inv * basis.xbasis;
    return out;
}

namespace {

// next k-combination of indices in [0, n)
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// does an essential vector of weight exactly w exist in ker(checks) \ row(boundaries)?
bool essential_at_weight(const BitMatrix& checks, const f2::Rref& boundaries, std::size_t n, std::size_t w) {
    std::vector<BitVector> syn(n, BitVector(checks.rows()));
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < checks.rows(); ++r)
            if (checks.row(r).get(q)) syn[q].set(r, true);
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    if (w > n) return false;
    do {
        BitVector s(checks.rows());
        for (auto q : idx) s ^= syn[q];
        if (s.none()) {
            BitVector v(n);
            for (auto q : idx) v.set(q, true);
            if (!boundaries.contains(v)) return true;
        }
    } while (next_combination(idx, n));
    return false;
}

// meet-in-the-middle variant for larger weights
bool essential_at_weight_mitm(const BitMatrix& checks, const f2::Rref& boundaries, std::size_t n, std::size_t w) {
    std::vector<BitVector> syn(n, BitVector(checks.rows()));
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < checks.rows(); ++r)
            if (checks.row(r).get(q)) syn[q].set(r, true);
    std::size_t w1 = w / 2, w2 = w - w1;
    auto key = [](const BitVector& v) {
        std::uint64_t h = 1469598103934665603ull;
        for (auto word : v.words()) {
            h ^= word;
            h *= 1099511628211ull;
        }
        return h;
    };
    // syndrome hash -> (max index, support) for all w1-subsets
    std::multimap<std::uint64_t, std::vector<std::size_t>> half;
    {
        std::vector<std::size_t> idx(w1);
        for (std::size_t i = 0; i < w1; ++i) idx[i] = i;
        if (w1 > 0 && w1 <= n) {
            do {
                BitVector s(checks.rows());
                for (auto q : idx) s ^= syn[q];
                half.emplace(key(s), idx);
            } while (next_combination(idx, n));
        } else if (w1 == 0) {
            half.emplace(key(BitVector(checks.rows())), std::vector<std::size_t>{});
        }
    }
    std::vector<std::size_t> idx(w2);
    for (std::size_t i = 0; i < w2; ++i) idx[i] = i;
    do {
        BitVector s(checks.rows());
        for (auto q : idx) s ^= syn[q];
        auto [lo, hi] = half.equal_range(key(s));
        for (auto it = lo; it != hi; ++it) {
            const auto& left = it->second;
            if (!left.empty() && left.back() >= idx.front()) continue;
            BitVector s2(checks.rows());
            for (auto q : left) s2 ^= syn[q];
            if (!(s2 == s)) continue;  // hash collision
            BitVector v(n);
            for (auto q : left) v.set(q, true);
            for (auto q : idx) v.set(q, true);
            if (!boundaries.contains(v)) return true;
        }
    } while (next_combination(idx, n));
    return false;
}

}  // namespace

std::optional<std::size_t> distance(const CssCode& code, std::size_t w_max) {
    require_valid(code);
    if (logical_count(code) == 0) return std::nullopt;
    auto zr = f2::rref(code.hz);
    auto xr = f2::rref(code.hx);
    bool mitm = w_max > 6;
    for (std::size_t w = 1; w <= std::min(w_max, code.n); ++w) {
        bool hit = (mitm && w > 6)
                       ? (essential_at_weight_mitm(code.hx, zr, code.n, w) ||
                          essential_at_weight_mitm(code.hz, xr, code.n, w))
                       : (essential_at_weight(code.hx, zr, code.n, w) ||
                          essential_at_weight(code.hz, xr, code.n, w));
        if (hit) return w;
    }
    return std::nullopt;
}

CssCode direct_sum(const CssCode& a, const CssCode& b) {
    require_valid(a);
    require_valid(b);
    CssCode out;
    out.n = a.n + b.n;
    out.label = a.label.empty() || b.label.empty() ? "" : a.label + "+" + b.label;
    auto embed = [&](const BitMatrix& top, const BitMatrix& bot) {
        BitMatrix m(top.rows() + bot.rows(), out.n);
        for (std::size_t i = 0; i < top.rows(); ++i)
            top.row(i).for_each_set([&](std::size_t j) { m.set(i, j, true); });
        for (std::size_t i = 0; i < bot.rows(); ++i)
            bot.row(i).for_each_set([&](std::size_t j) { m.set(top.rows() + i, a.n + j, true); });
        return m;
    };
    out.hx = embed(a.hx, b.hx);
    out.hz = embed(a.hz, b.hz);
    return out;
}

namespace {

nlohmann::ordered_json sparse_rows(const BitMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        m.row(i).for_each_set([&](std::size_t j) { row.push_back(j); });
        rows.push_back(std::move(row));
    }
    return rows;
}

BitMatrix dense_rows(const nlohmann::json& rows, std::size_t n) {
    BitMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        long long prev = -1;
        for (const auto& c : rows[i]) {
            long long j = c.get<long long>();
            if (j <= prev || j < 0 || static_cast<std::size_t>(j) >= n)
                throw std::invalid_argument("code JSON: row indices must be strictly increasing and in range");
            m.set(i, static_cast<std::size_t>(j), true);
            prev = j;
        }
    }
    return m;
}

}  // namespace

std::string to_json(const CssCode& code, const LogicalBasis* basis) {
    nlohmann::ordered_json j;
    j["n"] = code.n;
    j["hx"] = sparse_rows(code.hx);
    j["hz"] = sparse_rows(code.hz);
    if (!code.label.empty()) j["label"] = code.label;
    if (basis) {
        j["zbasis"] = sparse_rows(basis->zbasis);
        j["xbasis"] = sparse_rows(basis->xbasis);
    }
    return j.dump(1);
}

LoadedCode from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LoadedCode out;
    out.code.n = j.at("n").get<std::size_t>();
    out.code.hx = dense_rows(j.at("hx"), out.code.n);
    out.code.hz = dense_rows(j.at("hz"), out.code.n);
    if (j.contains("label")) out.code.label = j["label"].get<std::string>();
    if (j.contains("zbasis") && j.contains("xbasis")) {
        LogicalBasis b;
        b.zbasis = dense_rows(j["zbasis"], out.code.n);
        b.xbasis = dense_rows(j["xbasis"], out.code.n);
        out.basis = std::move(b);
    }
    return out;
}

LoadedCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

}  // namespace foldgate::css
