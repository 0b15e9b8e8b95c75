#include "foldgate/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "foldgate/coxeter.hpp"

namespace foldgate::constructors {

ClassicalCode repetition_chain(std::size_t d) {
    ClassicalCode c;
    c.n = d;
    c.h = f2::BitMatrix(d - 1, d);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        c.h.set(i, i, true);
        c.h.set(i, i + 1, true);
    }
    return c;
}

css::CssCode hypergraph_product(const ClassicalCode& a, const ClassicalCode& b) {
    std::size_t na = a.n, nb = b.n, ra = a.h.rows(), rb = b.h.rows();
    css::CssCode out;
    out.n = na * nb + ra * rb;
    out.label = "hgp";
    auto bidx = [&](std::size_t i, std::size_t j) { return i * nb + j; };
    auto cidx = [&](std::size_t r, std::size_t s) { return na * nb + r * rb + s; };
    out.hx = f2::BitMatrix(ra * nb, out.n);
    for (std::size_t r = 0; r < ra; ++r)
        for (std::size_t j = 0; j < nb; ++j) {
            auto& row = out.hx.row(r * nb + j);
            a.h.row(r).for_each_set([&](std::size_t i) { row.set(bidx(i, j), true); });
            for (std::size_t s = 0; s < rb; ++s)
                if (b.h.get(s, j)) row.set(cidx(r, s), true);
        }
    out.hz = f2::BitMatrix(na * rb, out.n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t s = 0; s < rb; ++s) {
            auto& row = out.hz.row(i * rb + s);
            b.h.row(s).for_each_set([&](std::size_t j) { row.set(bidx(i, j), true); });
            for (std::size_t r = 0; r < ra; ++r)
                if (a.h.get(r, i)) row.set(cidx(r, s), true);
        }
    css::require_valid(out);
    return out;
}

SurfaceCode surface_code(std::size_t d) {
    if (d < 2) throw std::invalid_argument("surface_code: d >= 2 required");
    ClassicalCode rep = repetition_chain(d);
    SurfaceCode out;
    out.code = hypergraph_product(rep, rep);
    out.code.label = "surface-" + std::to_string(d);
    std::size_t n = out.code.n;
    auto bidx = [&](std::size_t i, std::size_t j) { return i * d + j; };
    auto cidx = [&](std::size_t r, std::size_t s) { return d * d + r * (d - 1) + s; };
    dualities::CodeDuality tau;
    tau.kind = dualities::DualityKind::ZxDuality;
    tau.qubit_perm.resize(n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            tau.qubit_perm[bidx(i, j)] = static_cast<std::uint32_t>(bidx(j, i));
    for (std::size_t r = 0; r + 1 < d; ++r)
        for (std::size_t s = 0; s + 1 < d; ++s)
            tau.qubit_perm[cidx(r, s)] = static_cast<std::uint32_t>(cidx(s, r));
    // X-check (r, j) <-> Z-check (j, r); stacked check indices put X first
    std::size_t rx = out.code.hx.rows();
    tau.check_perm.resize(rx + out.code.hz.rows());
    for (std::size_t r = 0; r + 1 < d; ++r)
        for (std::size_t j = 0; j < d; ++j) {
            std::size_t x = r * d + j;
            std::size_t z = j * (d - 1) + r;
            tau.check_perm[x] = static_cast<std::uint32_t>(rx + z);
            tau.check_perm[rx + z] = static_cast<std::uint32_t>(x);
        }
    if (!dualities::is_symmetry(out.code, tau))
        throw std::logic_error("surface_code: diagonal fold is not a symmetry");
    out.diagonal = std::move(tau);
    return out;
}

bool is_action(const ClassicalCode& c, const GroupAction& act) {
    std::set<std::pair<dualities::Perm, dualities::Perm>> all(act.elements.begin(), act.elements.end());
    if (act.elements.empty()) return false;
    for (const auto& [bits, checks] : act.elements) {
        if (bits.size() != c.n || checks.size() != c.h.rows()) return false;
        for (std::size_t r = 0; r < c.h.rows(); ++r) {
            f2::BitVector img(c.n);
            c.h.row(r).for_each_set([&](std::size_t q) { img.set(bits[q], true); });
            if (!(img == c.h.row(checks[r]))) return false;
        }
    }
    // closure under composition (inverse follows for a finite closed set)
    for (const auto& g : act.elements)
        for (const auto& h : act.elements) {
            dualities::Perm bc(g.first.size()), cc(g.second.size());
            for (std::size_t i = 0; i < bc.size(); ++i) bc[i] = h.first[g.first[i]];
            for (std::size_t i = 0; i < cc.size(); ++i) cc[i] = h.second[g.second[i]];
            if (!all.count({bc, cc})) return false;
        }
    return true;
}

bool is_free(const GroupAction& act) {
    for (const auto& [bits, checks] : act.elements) {
        bool ident = true;
        for (std::size_t i = 0; i < bits.size() && ident; ++i) ident = bits[i] == i;
        for (std::size_t i = 0; i < checks.size() && ident; ++i) ident = checks[i] == i;
        if (ident) continue;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i] == i) return false;
        for (std::size_t i = 0; i < checks.size(); ++i)
            if (checks[i] == i) return false;
    }
    return true;
}

css::CssCode balanced_product(const ClassicalCode& a, const ClassicalCode& b,
                              const GroupAction& act_a, const GroupAction& act_b) {
    if (!is_action(a, act_a) || !is_action(b, act_b))
        throw std::invalid_argument("balanced_product: not a valid code action");
    if (act_a.elements.size() != act_b.elements.size())
        throw std::invalid_argument("balanced_product: group orders differ");
    if (!is_free(act_a) || !is_free(act_b))
        throw std::invalid_argument("balanced_product: action is not free on bits and checks");

    std::size_t order = act_a.elements.size();
    std::size_t na = a.n, nb = b.n, ra = a.h.rows(), rb = b.h.rows();

    // orbit representatives of the diagonal action, lexicographically smallest
    auto orbits = [&](std::size_t szA, std::size_t szB, auto permA, auto permB) {
        std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> rep;
        for (std::size_t i = 0; i < szA; ++i)
            for (std::size_t j = 0; j < szB; ++j) {
                std::pair<std::size_t, std::size_t> best{i, j};
                for (std::size_t e = 0; e < order; ++e)
                    best = std::min(best, {permA(e, i), permB(e, j)});
                rep[{i, j}] = best;
            }
        return rep;
    };
    auto abits = [&](std::size_t e, std::size_t i) { return act_a.elements[e].first[i]; };
    auto achk = [&](std::size_t e, std::size_t i) { return act_a.elements[e].second[i]; };
    auto bbits = [&](std::size_t e, std::size_t i) { return act_b.elements[e].first[i]; };
    auto bchk = [&](std::size_t e, std::size_t i) { return act_b.elements[e].second[i]; };

    auto bb = orbits(na, nb, abits, bbits);
    auto cc = orbits(ra, rb, achk, bchk);
    auto xx = orbits(ra, nb, achk, bbits);
    auto zz = orbits(na, rb, abits, bchk);

    auto index_of = [](const auto& reps) {
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> idx;
        for (const auto& [k, v] : reps)
            if (k == v) idx.emplace(k, idx.size());
        return idx;
    };
    auto bqi = index_of(bb), cqi = index_of(cc), xi = index_of(xx), zi = index_of(zz);

    css::CssCode out;
    out.n = bqi.size() + cqi.size();
    out.label = "balanced-product";
    std::size_t nb_q = bqi.size();
    out.hx = f2::BitMatrix(xi.size(), out.n);
    for (const auto& [key, row] : xi) {
        auto [r, j] = key;
        for (std::size_t i = 0; i < na; ++i)
            if (a.h.get(r, i)) out.hx.row(row).flip(bqi.at(bb.at({i, j})));
        for (std::size_t s = 0; s < rb; ++s)
            if (b.h.get(s, j)) out.hx.row(row).flip(nb_q + cqi.at(cc.at({r, s})));
    }
    out.hz = f2::BitMatrix(zi.size(), out.n);
    for (const auto& [key, row] : zi) {
        auto [i, s] = key;
        for (std::size_t j = 0; j < nb; ++j)
            if (b.h.get(s, j)) out.hz.row(row).flip(bqi.at(bb.at({i, j})));
        for (std::size_t r = 0; r < ra; ++r)
            if (a.h.get(r, i)) out.hz.row(row).flip(nb_q + cqi.at(cc.at({r, s})));
    }
    css::require_valid(out);
    return out;
}

GroupAction cyclic_shift_action(std::size_t n_bits, std::size_t n_checks, std::size_t step) {
    GroupAction act;
    std::size_t count = n_bits / std::gcd(step, n_bits);
    for (std::size_t e = 0; e < count; ++e) {
        dualities::Perm bits(n_bits), checks(n_checks);
        for (std::size_t i = 0; i < n_bits; ++i) bits[i] = static_cast<std::uint32_t>((i + e * step) % n_bits);
        for (std::size_t i = 0; i < n_checks; ++i) checks[i] = static_cast<std::uint32_t>((i + e * step) % n_checks);
        act.elements.emplace_back(std::move(bits), std::move(checks));
    }
    return act;
}

IncidenceReport golay_incidence() {
    css::CssCode bring = coxeter::hyperbolic_code(coxeter::quotient_55(0));
    std::size_t verts = bring.hx.rows(), faces = bring.hz.rows(), edges = bring.n;
    IncidenceReport rep;
    rep.code.n = verts + faces;
    rep.code.h = f2::BitMatrix(edges, rep.code.n);
    for (std::size_t e = 0; e < edges; ++e) {
        for (std::size_t v = 0; v < verts; ++v)
            if (bring.hx.get(v, e)) rep.code.h.set(e, v, true);
        for (std::size_t f = 0; f < faces; ++f)
            if (bring.hz.get(f, e)) rep.code.h.set(e, verts + f, true);
    }
    rep.rank = f2::rank(rep.code.h);
    f2::BitMatrix ker = f2::kernel_basis(rep.code.h);
    rep.k = ker.rows();
    rep.distance = rep.code.n;
    // full enumeration over the kernel
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << rep.k); ++bits) {
        f2::BitVector v(rep.code.n);
        for (std::size_t i = 0; i < rep.k; ++i)
            if ((bits >> i) & 1) v ^= ker.row(i);
        rep.distance = std::min(rep.distance, v.weight());
    }
    rep.matches_golay = rep.code.n == 24 && rep.k == 12 && rep.distance == 8;
    return rep;
}

std::string classical_to_json(const ClassicalCode& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.h.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        c.h.row(i).for_each_set([&](std::size_t q) { row.push_back(q); });
        rows.push_back(std::move(row));
    }
    j["h"] = rows;
    return j.dump(1);
}

ClassicalCode classical_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ClassicalCode c;
    c.n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("h");
    c.h = f2::BitMatrix(rows.size(), c.n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& q : rows[i]) c.h.set(i, q.get<std::size_t>(), true);
    return c;
}

std::string action_to_json(const GroupAction& a) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& [bits, checks] : a.elements) {
        nlohmann::ordered_json e;
        e["bits"] = bits;
        e["checks"] = checks;
        j.push_back(std::move(e));
    }
    return j.dump(1);
}

GroupAction action_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    GroupAction a;
    for (const auto& e : j)
        a.elements.emplace_back(e.at("bits").get<dualities::Perm>(), e.at("checks").get<dualities::Perm>());
    return a;
}

}  // namespace foldgate::constructors
