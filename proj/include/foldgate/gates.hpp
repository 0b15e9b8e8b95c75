#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "foldgate/css.hpp"
#include "foldgate/dualities.hpp"

namespace foldgate::gates {

using f2::BitMatrix;
using f2::BitVector;

// constant-depth circuit layers supported on the orbits of a duality
struct HadamardAll {};
struct SwapPairs {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
struct PhaseOnSet {
    std::vector<std::size_t> plus;   // S
    std::vector<std::size_t> minus;  // S^dagger
};
struct CzPairs {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
struct QubitPermutation {
    dualities::Perm perm;
};
using Layer = std::variant<HadamardAll, SwapPairs, PhaseOnSet, CzPairs, QubitPermutation>;
using TransversalCircuit = std::vector<Layer>;

// audit that the S / S^dagger factors cancel on every X-check
struct PhaseAudit {
    std::vector<std::pair<std::size_t, std::size_t>> per_xcheck;  // (|s ∩ A|, |s ∩ B|)
    bool balanced() const;
};

// 2n x 2n symplectic action on row vectors (z-part | x-part), acting from the right
struct PhysSymplectic {
    BitMatrix m;
    std::optional<PhaseAudit> audit;
};

struct LogicalGate {
    TransversalCircuit circuit;
    BitMatrix logical;     // 2k x 2k, same row layout and right action
    std::string basis_id;
};

struct PreconditionError : std::runtime_error {
    std::vector<std::string> reasons;
    explicit PreconditionError(std::vector<std::string> rs);
};

// standard symplectic form [[0, I], [I, 0]] on 2m coordinates
BitMatrix standard_omega(std::size_t m);
// form induced by a (possibly non-identity) Gram matrix: [[0, Phi^T], [Phi, 0]]
BitMatrix omega_from_gram(const css::GramMatrix& phi);
bool is_symplectic(const BitMatrix& m, const BitMatrix& omega);

BitMatrix phys_hadamard(const dualities::Perm& tau, std::size_t n);   // [[0, P],[P, 0]]
BitMatrix phys_phase(const dualities::Perm& tau, std::size_t n);      // [[I, 0],[P, I]]
BitMatrix phys_permutation(const dualities::Perm& sigma, std::size_t n);

// Project a stabilizer-preserving physical symplectic to the 2k x 2k logical
// action in the given basis. Throws if a stabilizer row leaves the stabilizer
// space (the circuit is not an encoded gate).
BitMatrix logical_action(const css::CssCode& code, const BitMatrix& phys,
                         const css::LogicalBasis& basis);

LogicalGate hadamard_gate(const css::CssCode& code, const dualities::CodeDuality& tau,
                          const css::LogicalBasis& basis, const std::string& basis_id = "");

// A/B split of the fixed qubits with |s ∩ A| = |s ∩ B| for every X-check.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
find_ab_partition(const css::CssCode& code, const dualities::CodeDuality& tau);

LogicalGate phase_gate(const css::CssCode& code, const dualities::CodeDuality& tau,
                       const css::LogicalBasis& basis, const std::string& basis_id = "");

// Stacking gate: CZ_{i, n+tau(i)} on code ⊕ code, from a self-inverse duality.
struct StackedPhase {
    css::CssCode stacked;
    css::LogicalBasis basis;
    dualities::CodeDuality duality;  // the fixed-point-free stacked duality
    LogicalGate gate;
};
StackedPhase stacked_phase_gate(const css::CssCode& code, const dualities::CodeDuality& tau);
StackedPhase stacked_phase_gate(const css::CssCode& code);  // picks a self-inverse duality

LogicalGate permutation_gate(const css::CssCode& code, const dualities::CodeDuality& sigma,
                             const css::LogicalBasis& basis, const std::string& basis_id = "");

// logical CZ / CNOT generators w.r.t. a symplectic (gram = identity) basis
BitMatrix logical_cz(std::size_t k, std::size_t i, std::size_t j);
BitMatrix logical_cnot(std::size_t k, std::size_t control, std::size_t target);

std::string circuit_to_json(const TransversalCircuit& c);
std::string gate_to_json(const LogicalGate& g);

}  // namespace foldgate::gates
