#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldgate/f2.hpp"

namespace foldgate::css {

using f2::BitMatrix;
using f2::BitVector;

// CSS code: X-checks hx (r_X x n) and Z-checks hz (r_Z x n) with hx hz^T = 0.
struct CssCode {
    std::size_t n = 0;
    BitMatrix hx, hz;
    std::string label;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> violations;  // (X-check, Z-check) with odd overlap
};

ValidationReport validate(const CssCode& code);
void require_valid(const CssCode& code);  // throws std::invalid_argument with the report

std::size_t logical_count(const CssCode& code);  // k = n - rank(hx) - rank(hz)

// Homology / cohomology representatives: zbasis rows span ker(hx) mod row(hz),
// xbasis rows span ker(hz) mod row(hx). Deterministic given the fixed pivoting order.
struct LogicalBasis {
    BitMatrix zbasis, xbasis;  // k x n each
    std::size_t k() const { return zbasis.rows(); }
};

LogicalBasis logical_bases(const CssCode& code);

// Gram matrix of overlap parities: phi[i][j] = <xbasis_i, zbasis_j> mod 2.
using GramMatrix = BitMatrix;
GramMatrix gram(const CssCode& code, const LogicalBasis& basis);

// checks that the rows are valid (co)cycle representatives, independent mod boundaries
bool basis_valid(const CssCode& code, const LogicalBasis& basis);

// Replace xbasis by Phi^-1 * xbasis so that gram becomes the identity.
// Each output row is a combination of input rows of its own sector.
LogicalBasis symplectify(const CssCode& code, const LogicalBasis& basis);

// Minimum weight of an essential (co)cycle over both sectors, searched up to w_max.
std::optional<std::size_t> distance(const CssCode& code, std::size_t w_max);

CssCode direct_sum(const CssCode& a, const CssCode& b);

// JSON interchange (sparse rows of strictly increasing column indices)
std::string to_json(const CssCode& code, const LogicalBasis* basis = nullptr);
struct LoadedCode {
    CssCode code;
    std::optional<LogicalBasis> basis;
};
LoadedCode from_json(const std::string& text);
LoadedCode load_code_file(const std::string& path);

}  // namespace foldgate::css
