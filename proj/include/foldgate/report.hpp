#pragma once

#include <optional>
#include <string>

#include "foldgate/css.hpp"

namespace foldgate::report {

inline constexpr const char* kSchema = "foldgate-report/1";
inline constexpr const char* kVersion = "1.0.0";

struct Options {
    bool dualities = false;
    bool gates = false;
    bool group = false;
    bool invariants = false;
    std::optional<std::size_t> distance_wmax;
    std::optional<css::LogicalBasis> basis;  // defaults to the computed deterministic basis
    std::string basis_id = "computed";
    std::size_t cap;
    Options();
};

// Runs the analysis pipeline (construction facts -> dualities -> gates ->
// group -> invariant subspaces) and renders a deterministic JSON report.
std::string analyze(const css::CssCode& code, const Options& opts, const std::string& input_bytes);

}  // namespace foldgate::report
