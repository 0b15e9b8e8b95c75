#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "foldgate/f2.hpp"

namespace foldgate::groups {

using f2::BitMatrix;
using f2::BitVector;

struct F2MatrixGroup {
    std::size_t dim = 0;
    std::vector<BitMatrix> generators;  // all invertible, dim x dim
};

F2MatrixGroup make_group(std::size_t dim, std::vector<BitMatrix> gens);  // checks invertibility

// Base-and-strong-generating-set chain for the right action on nonzero row
// vectors of F2^dim. Exact order as an unbounded integer; membership by sifting.
class BSGSChain {
public:
    explicit BSGSChain(const F2MatrixGroup& g);

    mpz_class order() const;
    bool contains(const BitMatrix& m) const;
    std::size_t base_length() const;
    std::vector<std::size_t> orbit_lengths() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

mpz_class order(const F2MatrixGroup& g);
bool contains(const F2MatrixGroup& g, const BitMatrix& m);

// |Sp_2k(F2)| = 2^(k^2) * prod_{i=1..k} (4^i - 1)
mpz_class sp_order(std::size_t k);

// index of <generators> in Sp_2k(F2) w.r.t. the standard form; throws if a
// generator is not symplectic or the order does not divide
mpz_class index_in_sp(const F2MatrixGroup& g, std::size_t k);

enum class SubspaceClass { Symplectic, Lagrangian, Isotropic, Other };
const char* subspace_class_name(SubspaceClass c);
SubspaceClass classify_subspace(const BitMatrix& basis, const BitMatrix& omega);

struct InvariantSubspace {
    BitMatrix basis;  // rref rows
    SubspaceClass cls = SubspaceClass::Other;
};

struct SubspaceDecomposition {
    std::vector<InvariantSubspace> components;  // direct sum covering F2^dim
    std::vector<InvariantSubspace> invariant_subspaces;  // all proper ones the search found
};

// Deterministic search for invariant subspaces: spins of standard-basis seeds,
// then kernels of minimal-polynomial factors of a fixed word list over the
// generators. An irreducible action returns the full space as one component.
SubspaceDecomposition invariant_subspaces(const F2MatrixGroup& g, const BitMatrix& omega,
                                          bool randomized_fallback = false);

// generators rewritten in the coordinates of an invariant subspace
struct RestrictedGroup {
    F2MatrixGroup group;
    BitMatrix subspace;  // the basis the coordinates refer to
};
RestrictedGroup restrict_to(const F2MatrixGroup& g, const BitMatrix& subspace_basis);

// smallest invariant subspace containing the seed rows
BitMatrix spin(const std::vector<BitVector>& seeds, const F2MatrixGroup& g);

// --- quadratic refinements of the standard symplectic form ------------------
// theta_d(v) = v_z . v_x + d . v over 2k coordinates; every M preserving the
// standard form preserves theta_d iff theta_d(row_i(M)) == d_i for all i.
bool preserves_theta(const BitMatrix& m, const BitVector& d, std::size_t k);
// all diagonals d whose form is preserved by every generator
std::vector<BitVector> invariant_theta_diagonals(const F2MatrixGroup& g, std::size_t k);
bool theta_arf(const BitVector& d, std::size_t k);  // Arf invariant; false = plus type
// symplectic basis change T with theta_d(v T) = theta_0(v); rows are the new basis
BitMatrix theta_adapted_basis(const BitVector& d, std::size_t k);

std::string group_to_json(const F2MatrixGroup& g);  // order emitted as decimal string
F2MatrixGroup group_from_json(const std::string& text);

}  // namespace foldgate::groups
