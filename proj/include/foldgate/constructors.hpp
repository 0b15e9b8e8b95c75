#pragma once

#include <string>
#include <vector>

#include "foldgate/css.hpp"
#include "foldgate/dualities.hpp"

namespace foldgate::constructors {

struct ClassicalCode {
    std::size_t n = 0;
    f2::BitMatrix h;  // r x n
};

ClassicalCode repetition_chain(std::size_t d);  // (d-1) x d chain checks

// Tillich-Zemor hypergraph product. Qubits: the (bit_a, bit_b) block row-major,
// then the (check_a, check_b) block. H_X = [H_a ⊗ I | I ⊗ H_b^T],
// H_Z = [I ⊗ H_b | H_a^T ⊗ I].
css::CssCode hypergraph_product(const ClassicalCode& a, const ClassicalCode& b);

struct SurfaceCode {
    css::CssCode code;                 // hypergraph product of two repetition chains
    dualities::CodeDuality diagonal;   // the transpose fold: a self-inverse ZX-duality
};
SurfaceCode surface_code(std::size_t d);  // throws for d < 2

// A group acting on a classical code: each element is a pair of permutations
// (bits, checks) forming a Tanner automorphism; the set is closed under
// composition and inverse.
struct GroupAction {
    std::vector<std::pair<dualities::Perm, dualities::Perm>> elements;
};

bool is_action(const ClassicalCode& c, const GroupAction& act);
bool is_free(const GroupAction& act);  // no nontrivial element fixes a bit or a check

// Quotient of the hypergraph-product double complex by the diagonal action.
// Requires free actions of the same group order on both factors; orbit
// representatives are the lexicographically smallest pairs.
css::CssCode balanced_product(const ClassicalCode& a, const ClassicalCode& b,
                              const GroupAction& act_a, const GroupAction& act_b);

GroupAction cyclic_shift_action(std::size_t n_bits, std::size_t n_checks, std::size_t step);

std::string classical_to_json(const ClassicalCode& c);
ClassicalCode classical_from_json(const std::string& text);
std::string action_to_json(const GroupAction& a);
GroupAction action_from_json(const std::string& text);

// The 30x24 edge-incidence code over the 12 vertices and 12 faces of Bring's
// surface: each edge-check hits its two endpoints and its two incident faces.
// The construction verifies the resulting parameters and reports them.
struct IncidenceReport {
    ClassicalCode code;        // 30 checks x 24 bits
    std::size_t rank = 0;
    std::size_t k = 0;         // kernel dimension
    std::size_t distance = 0;  // min nonzero kernel weight, by full enumeration
    bool matches_golay = false;  // true iff [24,12,8]
};
IncidenceReport golay_incidence();

}  // namespace foldgate::constructors
