#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "foldgate/css.hpp"

namespace foldgate::dualities {

using Perm = std::vector<std::uint32_t>;

enum class DualityKind { Automorphism, ZxDuality };

// A Tanner-graph symmetry. check_perm indexes the stacked check list: X-checks
// 0..r_X-1 followed by Z-checks r_X..r_X+r_Z-1. An automorphism preserves the
// two blocks; a ZX-duality exchanges them completely.
struct CodeDuality {
    Perm qubit_perm;
    Perm check_perm;
    DualityKind kind = DualityKind::Automorphism;

    bool self_inverse() const;
};

struct Census {
    std::vector<CodeDuality> automorphisms;  // closed under composition and inverse
    std::vector<CodeDuality> zx_dualities;   // the full-swap elements; empty iff not self-ZX-dual
    std::size_t mixed = 0;                   // typeless symmetries that mix the sectors partially
    std::size_t typeless_order() const { return automorphisms.size() + zx_dualities.size() + mixed; }
};

inline constexpr std::size_t kDefaultCap = 1000000;
std::size_t census_cap();  // kDefaultCap, overridable via FOLDGATE_CAP

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumerate the automorphism group of the typeless Tanner graph and split it by kind.
Census css_census(const css::CssCode& code, std::size_t cap = census_cap());

std::vector<CodeDuality> automorphism_group(const css::CssCode& code, std::size_t cap = census_cap());
std::vector<CodeDuality> zx_dualities(const css::CssCode& code, std::size_t cap = census_cap());

// the commuting-square check: sigma_r H = H sigma_n, bit-exact
bool is_symmetry(const css::CssCode& code, const CodeDuality& d);

struct DualityProfile {
    bool self_inverse = false;
    std::vector<std::size_t> fixed_qubits;
    std::vector<bool> xcheck_overlap_odd;        // parity of |support ∩ fixed set| per X-check
    std::vector<std::size_t> xcheck_pair_orbits; // 2-element orbits contained in the support
};

DualityProfile profile(const css::CssCode& code, const CodeDuality& tau);

struct Tau0Result {
    CodeDuality tau0;
    std::size_t multiplicity = 0;  // how many self-inverse dualities satisfy the pairing
};

// Self-inverse ZX-duality mapping each zbasis support onto the matching xbasis
// support. Throws if none exists; multiplicity flags a non-unique match.
Tau0Result find_tau0(const css::CssCode& code, const css::LogicalBasis& basis,
                     std::size_t cap = census_cap());

// composition (apply a, then b) and inverse in the typeless symmetry group
CodeDuality compose(const CodeDuality& a, const CodeDuality& b);
CodeDuality inverse(const CodeDuality& d);

// Colored-graph isomorphism between two codes' Tanner graphs (used to align a
// constructed code with a fixture labeling). Returns qubit and check maps a -> b.
struct CodeIso {
    Perm qubit_map;
    Perm check_map;
};
std::optional<CodeIso> find_isomorphism(const css::CssCode& a, const css::CssCode& b);

// generic engine: automorphisms of a classical Tanner graph (bits + one check color)
std::vector<std::pair<Perm, Perm>> classical_tanner_automorphisms(const f2::BitMatrix& h,
                                                                  std::size_t cap = census_cap());

// JSON {qubits, checks, kind}
std::string duality_to_json(const CodeDuality& d);
CodeDuality duality_from_json(const std::string& text);

}  // namespace foldgate::dualities
