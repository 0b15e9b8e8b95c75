#include "foldgate/report.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "foldgate/dualities.hpp"
#include "foldgate/gates.hpp"
#include "foldgate/groups.hpp"

namespace foldgate::report {

namespace {

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::ordered_json matrix_bits(const f2::BitMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string bits(m.cols(), '0');
        m.row(i).for_each_set([&](std::size_t c) { bits[c] = '1'; });
        rows.push_back(bits);
    }
    return rows;
}

}  // namespace

Options::Options() : cap(dualities::census_cap()) {}

std::string analyze(const css::CssCode& code, const Options& opts, const std::string& input_bytes) {
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["version"] = kVersion;
    j["input_digest"] = "fnv1a64:" + fnv1a64(input_bytes);
    if (!code.label.empty()) j["label"] = code.label;

    css::require_valid(code);
    std::size_t k = css::logical_count(code);
    j["n"] = code.n;
    j["k"] = k;
    j["r_x"] = code.hx.rows();
    j["r_z"] = code.hz.rows();
    if (opts.distance_wmax) {
        auto d = css::distance(code, *opts.distance_wmax);
        j["distance_wmax"] = *opts.distance_wmax;
        j["distance"] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
    }

    css::LogicalBasis basis;
    if (opts.basis) {
        basis = *opts.basis;
        if (!css::basis_valid(code, basis))
            throw std::invalid_argument("supplied basis is not a valid logical basis for the code");
        j["basis"] = opts.basis_id;
    } else {
        basis = css::symplectify(code, css::logical_bases(code));
        j["basis"] = "computed-symplectic";
    }

    std::optional<dualities::Census> census;
    if (opts.dualities || opts.gates || opts.group || opts.invariants) {
        census = dualities::css_census(code, opts.cap);
        nlohmann::ordered_json dj;
        dj["automorphisms"] = census->automorphisms.size();
        dj["zx_dualities"] = census->zx_dualities.size();
        dj["mixed_sector_symmetries"] = census->mixed;
        std::size_t self_inv = 0;
        for (const auto& t : census->zx_dualities) self_inv += t.self_inverse();
        dj["self_inverse_zx_dualities"] = self_inv;
        if (opts.dualities) {
            nlohmann::ordered_json elig = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < census->zx_dualities.size(); ++i) {
                const auto& tau = census->zx_dualities[i];
                nlohmann::ordered_json e;
                e["index"] = i;
                e["self_inverse"] = tau.self_inverse();
                auto prof = dualities::profile(code, tau);
                e["fixed_qubits"] = prof.fixed_qubits.size();
                bool ok = prof.self_inverse && prof.fixed_qubits.size() % 2 == 0;
                for (bool odd : prof.xcheck_overlap_odd) ok &= !odd;
                for (auto orbits : prof.xcheck_pair_orbits) ok &= orbits % 2 == 0;
                if (ok) {
                    try {
                        gates::find_ab_partition(code, tau);
                    } catch (const gates::PreconditionError&) {
                        ok = false;
                    }
                }
                e["phase_type_eligible"] = ok;
                elig.push_back(std::move(e));
            }
            dj["per_duality"] = std::move(elig);
        }
        j["dualities"] = std::move(dj);
    }

    std::vector<f2::BitMatrix> gate_gens;
    if (opts.gates || opts.group || opts.invariants) {
        if (census->zx_dualities.empty())
            throw std::invalid_argument("code has no ZX-duality; gate synthesis is not applicable");
        nlohmann::ordered_json gj;
        nlohmann::ordered_json hs = nlohmann::ordered_json::array();
        std::set<std::vector<std::uint64_t>> seen;
        auto key = [](const f2::BitMatrix& m) {
            std::vector<std::uint64_t> kk;
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (auto w : m.row(i).words()) kk.push_back(w);
            return kk;
        };
        for (const auto& sigma : census->automorphisms) {
            auto g = gates::permutation_gate(code, sigma, basis, j["basis"]);
            if (seen.insert(key(g.logical)).second) gate_gens.push_back(g.logical);
        }
        std::size_t perm_images = gate_gens.size();
        gj["distinct_permutation_gates"] = perm_images;
        std::size_t h_count = 0, s_count = 0;
        for (const auto& tau : census->zx_dualities) {
            auto hg = gates::hadamard_gate(code, tau, basis, j["basis"]);
            if (seen.insert(key(hg.logical)).second) {
                gate_gens.push_back(hg.logical);
                ++h_count;
            }
            try {
                auto sg = gates::phase_gate(code, tau, basis, j["basis"]);
                if (seen.insert(key(sg.logical)).second) {
                    gate_gens.push_back(sg.logical);
                    ++s_count;
                }
            } catch (const gates::PreconditionError&) {
            }
        }
        gj["distinct_hadamard_gates"] = h_count;
        gj["distinct_phase_gates"] = s_count;
        if (opts.gates) {
            nlohmann::ordered_json mats = nlohmann::ordered_json::array();
            for (const auto& m : gate_gens) mats.push_back(matrix_bits(m));
            gj["logical_generators"] = std::move(mats);
        }
        j["gates"] = std::move(gj);
    }

    if (opts.group || opts.invariants) {
        auto phi = css::gram(code, basis);
        auto omega = gates::omega_from_gram(phi);
        groups::F2MatrixGroup grp = groups::make_group(2 * k, gate_gens);
        if (opts.group) {
            nlohmann::ordered_json grj;
            groups::BSGSChain chain(grp);
            grj["order"] = chain.order().get_str();
            if (phi == f2::BitMatrix::identity(k))
                grj["index_in_sp"] = groups::index_in_sp(grp, k).get_str();
            else
                grj["index_in_sp"] = nullptr;  // basis not symplectic; order is basis-independent
            j["group"] = std::move(grj);
        }
        if (opts.invariants) {
            auto dec = groups::invariant_subspaces(grp, omega);
            nlohmann::ordered_json inv;
            nlohmann::ordered_json comps = nlohmann::ordered_json::array();
            for (const auto& c : dec.components) {
                nlohmann::ordered_json cj;
                cj["dim"] = c.basis.rows();
                cj["class"] = groups::subspace_class_name(c.cls);
                cj["basis"] = matrix_bits(c.basis);
                comps.push_back(std::move(cj));
            }
            inv["components"] = std::move(comps);
            nlohmann::ordered_json all = nlohmann::ordered_json::array();
            for (const auto& c : dec.invariant_subspaces) {
                nlohmann::ordered_json cj;
                cj["dim"] = c.basis.rows();
                cj["class"] = groups::subspace_class_name(c.cls);
                all.push_back(std::move(cj));
            }
            inv["proper_invariant_subspaces"] = std::move(all);
            j["invariant_subspaces"] = std::move(inv);
        }
    }

    return j.dump(1) + "\n";
}

}  // namespace foldgate::report
