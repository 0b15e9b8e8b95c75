#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "foldgate/css.hpp"

namespace foldgate::coxeter {

// Words are sequences of signed 1-based generator indices: +g, or -g for the inverse.
using Word = std::vector<int>;

struct Presentation {
    std::vector<std::string> gens;      // single-letter names
    std::vector<Word> relators;
    std::vector<Word> subgroup;         // optional `sub:` line

    // Text format:
    //   gens: a b c
    //   rels: a^2 b^2 c^2 (ab)^5 (ac)^2 (bc)^5 (abcb)^3
    //   sub: a c
    // Lowercase letters are generators, uppercase their inverses, ^n is a power,
    // juxtaposition is the product and (...) groups.
    static Presentation parse(const std::string& text);
    Word parse_word(const std::string& w) const;
};

// Complete coset table for a subgroup. Coset 0 is the subgroup itself.
// Column layout: 2*g is the action of generator g, 2*g+1 of its inverse.
struct CosetTable {
    std::size_t n_cosets = 0;
    std::size_t n_gens = 0;
    std::vector<std::vector<std::uint32_t>> table;

    std::uint32_t act(std::uint32_t c, int signed_gen) const {
        return table[c][signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1];
    }
    std::uint32_t act_word(std::uint32_t c, const Word& w) const {
        for (int g : w) c = act(c, g);
        return c;
    }
    std::vector<std::uint32_t> gen_perm(std::size_t g) const;
};

// Todd-Coxeter coset enumeration (HLT with row filling and coincidence handling).
// Deterministic coset numbering: the finished table is renumbered by breadth-first
// traversal from coset 0 along generator columns in order. Throws if the live
// table would exceed `limit` cosets.
CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup, std::size_t limit);

// Hyperbolic surface code from a rotation-group presentation with generators (r, s):
// faces are cosets of <r>, edges of <rs>, vertices of <s>; boundary maps are coset
// intersection parities.
struct HyperbolicSurface {
    css::CssCode code;                                   // qubits = edges
    std::size_t faces = 0, edges = 0, vertices = 0;
    std::size_t rotation_order = 0, reflection_order = 0;
    // right action of the three reflections on edge labels (derived from the
    // index-2 reflection-group extension a,b,c with r = ab, s = bc)
    std::vector<std::vector<std::uint32_t>> reflections;
};

css::CssCode hyperbolic_code(const Presentation& rotation, std::size_t limit = 200000);
HyperbolicSurface hyperbolic_surface(const Presentation& rotation, std::size_t limit = 200000);

// Permutations of the edge cosets under the reflection generators a, b, c.
std::vector<std::vector<std::uint32_t>> symmetry_action(const Presentation& rotation,
                                                        std::size_t limit = 200000);

// Shipped presentations for the {5,5} quotient family (index 0 is Bring's code).
Presentation quotient_55(std::size_t index);
std::size_t quotient_55_count();

}  // namespace foldgate::coxeter
