#include "foldgate/gates.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace foldgate::gates {

PreconditionError::PreconditionError(std::vector<std::string> rs)
    : std::runtime_error([&rs] {
          std::string msg = "precondition violation:";
          for (const auto& r : rs) msg += " [" + r + "]";
          return msg;
      }()),
      reasons(std::move(rs)) {}

bool PhaseAudit::balanced() const {
    for (const auto& [a, b] : per_xcheck)
        if (a != b) return false;
    return true;
}

BitMatrix standard_omega(std::size_t m) {
    BitMatrix om(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        om.set(i, m + i, true);
        om.set(m + i, i, true);
    }
    return om;
}

BitMatrix omega_from_gram(const css::GramMatrix& phi) {
    std::size_t k = phi.rows();
    BitMatrix om(2 * k, 2 * k);
    BitMatrix phit = phi.transposed();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            om.set(i, k + j, phit.get(i, j));
            om.set(k + i, j, phi.get(i, j));
        }
    return om;
}

bool is_symplectic(const BitMatrix& m, const BitMatrix& omega) {
    return m * omega * m.transposed() == omega;
}

namespace {

BitMatrix perm_matrix(const dualities::Perm& p) {
    BitMatrix m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m.set(i, p[i], true);
    return m;
}

BitMatrix blocks2(const BitMatrix* a, const BitMatrix* b, const BitMatrix* c, const BitMatrix* d,
                  std::size_t m) {
    BitMatrix out(2 * m, 2 * m);
    auto put = [&](const BitMatrix* blk, std::size_t ro, std::size_t co) {
        if (!blk) return;
        for (std::size_t i = 0; i < m; ++i)
            blk->row(i).for_each_set([&](std::size_t j) { out.set(ro + i, co + j, true); });
    };
    put(a, 0, 0);
    put(b, 0, m);
    put(c, m, 0);
    put(d, m, m);
    return out;
}

}  // namespace

BitMatrix phys_hadamard(const dualities::Perm& tau, std::size_t n) {
    BitMatrix p = perm_matrix(tau);
    (void)n;
    return blocks2(nullptr, &p, &p, nullptr, tau.size());
}

BitMatrix phys_phase(const dualities::Perm& tau, std::size_t n) {
    BitMatrix p = perm_matrix(tau);
    BitMatrix id = BitMatrix::identity(n);
    return blocks2(&id, nullptr, &p, &id, n);
}

BitMatrix phys_permutation(const dualities::Perm& sigma, std::size_t n) {
    BitMatrix p = perm_matrix(sigma);
    (void)n;
    return blocks2(&p, nullptr, nullptr, &p, sigma.size());
}

BitMatrix logical_action(const css::CssCode& code, const BitMatrix& phys,
                         const css::LogicalBasis& basis) {
    std::size_t n = code.n, k = basis.k();
    if (phys.rows() != 2 * n || phys.cols() != 2 * n)
        throw std::invalid_argument("logical_action: physical matrix must be 2n x 2n");

    // stabilizer space: rows (hz | 0) and (0 | hx)
    f2::Rref stab;
    stab.rows = BitMatrix(0, 2 * n);
    auto widen = [&](const f2::BitVector& v, bool upper) {
        BitVector w(2 * n);
        v.for_each_set([&](std::size_t j) { w.set(upper ? n + j : j, true); });
        return w;
    };
    for (std::size_t i = 0; i < code.hz.rows(); ++i) stab.insert(widen(code.hz.row(i), false));
    for (std::size_t i = 0; i < code.hx.rows(); ++i) stab.insert(widen(code.hx.row(i), true));

    for (std::size_t i = 0; i < code.hz.rows(); ++i)
        if (!stab.contains(phys.apply_row(widen(code.hz.row(i), false))))
            throw std::runtime_error("logical_action: Z-stabilizer row not preserved; not an encoded gate");
    for (std::size_t i = 0; i < code.hx.rows(); ++i)
        if (!stab.contains(phys.apply_row(widen(code.hx.row(i), true))))
            throw std::runtime_error("logical_action: X-stabilizer row not preserved; not an encoded gate");

    // express images of the logical generators in the basis, modulo stabilizer rows
    BitMatrix zsys = basis.zbasis.vstack(code.hz).transposed();   // n x (k + r_Z)
    BitMatrix xsys = basis.xbasis.vstack(code.hx).transposed();
    BitMatrix out(2 * k, 2 * k);
    for (std::size_t r = 0; r < 2 * k; ++r) {
        BitVector v = r < k ? widen(basis.zbasis.row(r), false) : widen(basis.xbasis.row(r - k), true);
        BitVector img = phys.apply_row(v);
        BitVector zpart(n), xpart(n);
        img.for_each_set([&](std::size_t j) {
            if (j < n) zpart.set(j, true); else xpart.set(j - n, true);
        });
        auto zc = f2::solve(zsys, zpart);
        auto xc = f2::solve(xsys, xpart);
        if (!zc || !xc)
            throw std::runtime_error("logical_action: image leaves the span of logicals and stabilizers");
        for (std::size_t i = 0; i < k; ++i) {
            out.set(r, i, zc->get(i));
            out.set(r, k + i, xc->get(i));
        }
    }
    return out;
}

namespace {

void require_zx(const css::CssCode& code, const dualities::CodeDuality& tau) {
    if (tau.kind != dualities::DualityKind::ZxDuality)
        throw PreconditionError({"duality is not of kind zx-duality"});
    if (!dualities::is_symmetry(code, tau))
        throw PreconditionError({"permutation pair does not commute with the stacked check matrix"});
}

}  // namespace

LogicalGate hadamard_gate(const css::CssCode& code, const dualities::CodeDuality& tau,
                          const css::LogicalBasis& basis, const std::string& basis_id) {
    require_zx(code, tau);
    LogicalGate g;
    g.basis_id = basis_id;
    if (tau.self_inverse()) {
        SwapPairs swaps;
        for (std::size_t i = 0; i < code.n; ++i)
            if (tau.qubit_perm[i] > i) swaps.pairs.emplace_back(i, tau.qubit_perm[i]);
        g.circuit.push_back(std::move(swaps));
    } else {
        g.circuit.push_back(QubitPermutation{tau.qubit_perm});
    }
    g.circuit.push_back(HadamardAll{});
    g.logical = logical_action(code, phys_hadamard(tau.qubit_perm, code.n), basis);
    return g;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
find_ab_partition(const css::CssCode& code, const dualities::CodeDuality& tau) {
    std::vector<std::size_t> fixed;
    for (std::size_t q = 0; q < code.n; ++q)
        if (tau.qubit_perm[q] == q) fixed.push_back(q);
    std::vector<int> side(code.n, -1);

    // the constraints only involve checks that meet the fixed set
    struct Constraint {
        std::vector<std::size_t> members;
        std::size_t half;
    };
    std::vector<Constraint> cons;
    f2::BitVector fmask(code.n);
    for (auto q : fixed) fmask.set(q, true);
    for (std::size_t i = 0; i < code.hx.rows(); ++i) {
        std::size_t ov = code.hx.row(i).overlap(fmask);
        if (ov == 0) continue;
        if (ov % 2)
            throw PreconditionError({"X-check " + std::to_string(i) + " has odd overlap with the fixed set"});
        Constraint c;
        c.half = ov / 2;
        code.hx.row(i).for_each_set([&](std::size_t q) {
            if (fmask.get(q)) c.members.push_back(q);
        });
        cons.push_back(std::move(c));
    }

    // backtracking two-coloring with a balance bound per constraint
    auto feasible = [&]() {
        for (const auto& c : cons) {
            std::size_t a = 0, unknown = 0;
            for (auto q : c.members) {
                if (side[q] == 0) ++a;
                if (side[q] == -1) ++unknown;
            }
            if (a > c.half || a + unknown < c.half) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> bt = [&](std::size_t i) -> bool {
        if (i == fixed.size()) return feasible();
        for (int v : {0, 1}) {
            side[fixed[i]] = v;
            if (feasible() && bt(i + 1)) return true;
        }
        side[fixed[i]] = -1;
        return false;
    };
    if (!bt(0)) throw PreconditionError({"no balanced A/B partition of the fixed qubits exists"});
    std::vector<std::size_t> A, B;
    for (auto q : fixed) (side[q] == 0 ? A : B).push_back(q);
    return {A, B};
}

LogicalGate phase_gate(const css::CssCode& code, const dualities::CodeDuality& tau,
                       const css::LogicalBasis& basis, const std::string& basis_id) {
    require_zx(code, tau);
    auto prof = dualities::profile(code, tau);
    std::vector<std::string> bad;
    if (!prof.self_inverse) bad.push_back("duality is not self-inverse");
    if (prof.fixed_qubits.size() % 2) bad.push_back("fixed-qubit count is odd");
    for (std::size_t i = 0; i < prof.xcheck_overlap_odd.size(); ++i)
        if (prof.xcheck_overlap_odd[i])
            bad.push_back("X-check " + std::to_string(i) + " has odd overlap with the fixed set");
    for (std::size_t i = 0; i < prof.xcheck_pair_orbits.size(); ++i)
        if (prof.xcheck_pair_orbits[i] % 2)
            bad.push_back("X-check " + std::to_string(i) + " contains an odd number of 2-orbits");
    if (!bad.empty()) throw PreconditionError(std::move(bad));

    auto [A, B] = find_ab_partition(code, tau);
    LogicalGate g;
    g.basis_id = basis_id;
    g.circuit.push_back(PhaseOnSet{A, B});
    CzPairs czs;
    for (std::size_t i = 0; i < code.n; ++i)
        if (tau.qubit_perm[i] > i) czs.pairs.emplace_back(i, tau.qubit_perm[i]);
    g.circuit.push_back(std::move(czs));

    BitMatrix phys = phys_phase(tau.qubit_perm, code.n);
    g.logical = logical_action(code, phys, basis);

    // sign audit: the i / -i factors from S and S^dagger must cancel per X-check
    PhaseAudit audit;
    f2::BitVector amask(code.n), bmask(code.n);
    for (auto q : A) amask.set(q, true);
    for (auto q : B) bmask.set(q, true);
    for (std::size_t i = 0; i < code.hx.rows(); ++i)
        audit.per_xcheck.emplace_back(code.hx.row(i).overlap(amask), code.hx.row(i).overlap(bmask));
    if (!audit.balanced()) throw std::logic_error("phase_gate: A/B partition failed the sign audit");
    return g;
}

StackedPhase stacked_phase_gate(const css::CssCode& code, const dualities::CodeDuality& tau) {
    require_zx(code, tau);
    if (!tau.self_inverse()) throw PreconditionError({"duality is not self-inverse"});
    StackedPhase out;
    out.stacked = css::direct_sum(code, code);
    out.stacked.label = code.label.empty() ? "stacked" : code.label + " stacked";

    std::size_t n = code.n, rx = code.hx.rows(), rz = code.hz.rows();
    dualities::CodeDuality stacked_tau;
    stacked_tau.kind = dualities::DualityKind::ZxDuality;
    stacked_tau.qubit_perm.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        stacked_tau.qubit_perm[i] = static_cast<std::uint32_t>(n + tau.qubit_perm[i]);
        stacked_tau.qubit_perm[n + tau.qubit_perm[i]] = static_cast<std::uint32_t>(i);
    }
    // stacked checks: X = (X_a | X_b), Z = (Z_a | Z_b); tau sends X_a(i) -> Z_b(tau_X(i)) etc.
    std::size_t R = 2 * (rx + rz);
    stacked_tau.check_perm.resize(R);
    auto xa = [&](std::size_t i) { return i; };
    auto xb = [&](std::size_t i) { return rx + i; };
    auto za = [&](std::size_t i) { return 2 * rx + i; };
    auto zb = [&](std::size_t i) { return 2 * rx + rz + i; };
    for (std::size_t i = 0; i < rx; ++i) {
        std::size_t zi = tau.check_perm[i] - rx;  // image Z-check under tau
        stacked_tau.check_perm[xa(i)] = static_cast<std::uint32_t>(zb(zi));
        stacked_tau.check_perm[xb(i)] = static_cast<std::uint32_t>(za(zi));
    }
    for (std::size_t i = 0; i < rz; ++i) {
        std::size_t xi = tau.check_perm[rx + i];  // image X-check under tau
        stacked_tau.check_perm[za(i)] = static_cast<std::uint32_t>(xb(xi));
        stacked_tau.check_perm[zb(i)] = static_cast<std::uint32_t>(xa(xi));
    }
    if (!dualities::is_symmetry(out.stacked, stacked_tau))
        throw std::logic_error("stacked_phase_gate: stacked duality is not a symmetry");
    for (std::size_t i = 0; i < 2 * n; ++i)
        if (stacked_tau.qubit_perm[i] == i)
            throw std::logic_error("stacked_phase_gate: stacked duality has a fixed point");
    out.duality = stacked_tau;

    out.basis = css::logical_bases(out.stacked);
    LogicalGate g;
    g.basis_id = "computed";
    CzPairs czs;
    for (std::size_t i = 0; i < n; ++i) czs.pairs.emplace_back(i, n + tau.qubit_perm[i]);
    g.circuit.push_back(std::move(czs));
    g.logical = logical_action(out.stacked, phys_phase(stacked_tau.qubit_perm, 2 * n), out.basis);
    out.gate = std::move(g);
    return out;
}

StackedPhase stacked_phase_gate(const css::CssCode& code) {
    auto duals = dualities::zx_dualities(code);
    for (const auto& tau : duals)
        if (tau.self_inverse()) return stacked_phase_gate(code, tau);
    throw PreconditionError({"code has no self-inverse ZX-duality"});
}

LogicalGate permutation_gate(const css::CssCode& code, const dualities::CodeDuality& sigma,
                             const css::LogicalBasis& basis, const std::string& basis_id) {
    if (sigma.kind != dualities::DualityKind::Automorphism)
        throw PreconditionError({"duality is not of kind automorphism"});
    if (!dualities::is_symmetry(code, sigma))
        throw PreconditionError({"permutation pair does not commute with the stacked check matrix"});
    LogicalGate g;
    g.basis_id = basis_id;
    g.circuit.push_back(QubitPermutation{sigma.qubit_perm});
    g.logical = logical_action(code, phys_permutation(sigma.qubit_perm, code.n), basis);
    return g;
}

BitMatrix logical_cz(std::size_t k, std::size_t i, std::size_t j) {
    BitMatrix m = BitMatrix::identity(2 * k);
    m.set(k + i, j, true);
    m.set(k + j, i, true);
    return m;
}

BitMatrix logical_cnot(std::size_t k, std::size_t control, std::size_t target) {
    BitMatrix m = BitMatrix::identity(2 * k);
    m.set(target, control, true);       // Z_target -> Z_control Z_target
    m.set(k + control, k + target, true);  // X_control -> X_control X_target
    return m;
}

namespace {

nlohmann::ordered_json layer_json(const Layer& l) {
    nlohmann::ordered_json j;
    if (std::holds_alternative<HadamardAll>(l)) {
        j["type"] = "hadamard-all";
    } else if (const auto* s = std::get_if<SwapPairs>(&l)) {
        j["type"] = "swap-pairs";
        j["pairs"] = s->pairs;
    } else if (const auto* p = std::get_if<PhaseOnSet>(&l)) {
        j["type"] = "phase-on-set";
        j["plus"] = p->plus;
        j["minus"] = p->minus;
    } else if (const auto* c = std::get_if<CzPairs>(&l)) {
        j["type"] = "cz-pairs";
        j["pairs"] = c->pairs;
    } else if (const auto* q = std::get_if<QubitPermutation>(&l)) {
        j["type"] = "qubit-permutation";
        j["perm"] = q->perm;
    }
    return j;
}

}  // namespace

std::string circuit_to_json(const TransversalCircuit& c) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& l : c) j.push_back(layer_json(l));
    return j.dump();
}

std::string gate_to_json(const LogicalGate& g) {
    nlohmann::ordered_json j;
    j["circuit"] = nlohmann::ordered_json::parse(circuit_to_json(g.circuit));
    j["basis"] = g.basis_id;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.logical.rows(); ++i) {
        std::string bits(g.logical.cols(), '0');
        g.logical.row(i).for_each_set([&](std::size_t c) { bits[c] = '1'; });
        rows.push_back(bits);
    }
    j["logical"] = rows;
    return j.dump();
}

}  // namespace foldgate::gates
