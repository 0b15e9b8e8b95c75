#include "foldgate/dualities.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace foldgate::dualities {

namespace {

struct Graph {
    std::vector<std::vector<std::uint32_t>> adj;
    std::size_t size() const { return adj.size(); }
};

// equitable refinement: iterate color <- (color, sorted multiset of neighbor colors)
std::vector<std::uint32_t> refine(const Graph& g, std::vector<std::uint32_t> colors) {
    for (;;) {
        std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> sig(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) {
            std::vector<std::uint32_t> nb;
            nb.reserve(g.adj[v].size());
            for (auto u : g.adj[v]) nb.push_back(colors[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {colors[v], std::move(nb)};
        }
        std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> ids;
        for (const auto& s : sig) ids.emplace(s, 0);
        std::uint32_t next = 0;
        for (auto& [k, v] : ids) v = next++;
        std::vector<std::uint32_t> out(g.size());
        bool changed = false;
        for (std::size_t v = 0; v < g.size(); ++v) {
            out[v] = ids[sig[v]];
            changed |= out[v] != colors[v];
        }
        if (!changed) return colors;
        colors = std::move(out);
    }
}

std::vector<std::pair<std::uint32_t, std::size_t>> color_histogram(const std::vector<std::uint32_t>& c) {
    std::map<std::uint32_t, std::size_t> h;
    for (auto x : c) ++h[x];
    return {h.begin(), h.end()};
}

// Backtracking enumeration of color-preserving isomorphisms between two colored
// graphs (equal graphs give the automorphism group). Individualize the first
// vertex of the smallest-colored non-singleton cell on the domain side and try
// every image-side vertex of that color, refining both sides in lockstep.
class IsoSearch {
public:
    IsoSearch(const Graph& a, const Graph& b, std::size_t cap, bool first_only)
        : a_(a), b_(b), cap_(cap), first_only_(first_only) {}

    std::vector<Perm> run(std::vector<std::uint32_t> ca, std::vector<std::uint32_t> cb) {
        rec(std::move(ca), std::move(cb), static_cast<std::uint32_t>(a_.size() + b_.size() + 1));
        return std::move(found_);
    }

private:
    const Graph& a_;
    const Graph& b_;
    std::size_t cap_;
    bool first_only_;
    std::vector<Perm> found_;

    bool done() const { return first_only_ && !found_.empty(); }

    void rec(std::vector<std::uint32_t> ca, std::vector<std::uint32_t> cb, std::uint32_t fresh) {
        if (done()) return;
        ca = refine(a_, std::move(ca));
        cb = refine(b_, std::move(cb));
        if (color_histogram(ca) != color_histogram(cb)) return;
        std::map<std::uint32_t, std::vector<std::uint32_t>> cellsA, cellsB;
        for (std::size_t v = 0; v < a_.size(); ++v) cellsA[ca[v]].push_back(static_cast<std::uint32_t>(v));
        for (std::size_t v = 0; v < b_.size(); ++v) cellsB[cb[v]].push_back(static_cast<std::uint32_t>(v));
        std::uint32_t target = 0;
        bool have_target = false;
        for (const auto& [col, cell] : cellsA)
            if (cell.size() > 1) {
                target = col;
                have_target = true;
                break;
            }
        if (!have_target) {
            Perm perm(a_.size());
            std::map<std::uint32_t, std::uint32_t> img;
            for (std::size_t v = 0; v < b_.size(); ++v) img[cb[v]] = static_cast<std::uint32_t>(v);
            for (std::size_t v = 0; v < a_.size(); ++v) perm[v] = img[ca[v]];
            for (std::size_t v = 0; v < a_.size(); ++v) {
                std::vector<std::uint32_t> lhs;
                for (auto u : a_.adj[v]) lhs.push_back(perm[u]);
                std::sort(lhs.begin(), lhs.end());
                std::vector<std::uint32_t> rhs = b_.adj[perm[v]];
                std::sort(rhs.begin(), rhs.end());
                if (lhs != rhs) return;
            }
            found_.push_back(std::move(perm));
            if (found_.size() > cap_) throw CapExceeded("symmetry enumeration cap exceeded");
            return;
        }
        std::uint32_t v = cellsA[target][0];
        for (std::uint32_t w : cellsB[target]) {
            if (done()) return;
            auto ca2 = ca;
            auto cb2 = cb;
            ca2[v] = fresh;
            cb2[w] = fresh;
            rec(std::move(ca2), std::move(cb2), fresh + 1);
        }
    }
};

Graph tanner_graph(const css::CssCode& code) {
    std::size_t rx = code.hx.rows(), rz = code.hz.rows();
    Graph g;
    g.adj.resize(code.n + rx + rz);
    auto link = [&](std::size_t check_vertex, const f2::BitVector& row) {
        row.for_each_set([&](std::size_t q) {
            g.adj[check_vertex].push_back(static_cast<std::uint32_t>(q));
            g.adj[q].push_back(static_cast<std::uint32_t>(check_vertex));
        });
    };
    for (std::size_t i = 0; i < rx; ++i) link(code.n + i, code.hx.row(i));
    for (std::size_t i = 0; i < rz; ++i) link(code.n + rx + i, code.hz.row(i));
    return g;
}

}  // namespace

std::size_t census_cap() {
    if (const char* env = std::getenv("FOLDGATE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultCap;
}

bool CodeDuality::self_inverse() const {
    for (std::size_t i = 0; i < qubit_perm.size(); ++i)
        if (qubit_perm[qubit_perm[i]] != i) return false;
    for (std::size_t i = 0; i < check_perm.size(); ++i)
        if (check_perm[check_perm[i]] != i) return false;
    return true;
}

Census css_census(const css::CssCode& code, std::size_t cap) {
    Graph g = tanner_graph(code);
    std::size_t rx = code.hx.rows(), rz = code.hz.rows();
    std::vector<std::uint32_t> colors(code.n + rx + rz, 0);
    for (std::size_t i = 0; i < rx + rz; ++i) colors[code.n + i] = 1;  // typeless: one check color
    IsoSearch search(g, g, cap, false);
    auto perms = search.run(colors, colors);
    Census out;
    for (const auto& p : perms) {
        CodeDuality d;
        d.qubit_perm.assign(p.begin(), p.begin() + static_cast<long>(code.n));
        d.check_perm.resize(rx + rz);
        for (std::size_t i = 0; i < rx + rz; ++i) d.check_perm[i] = p[code.n + i] - static_cast<std::uint32_t>(code.n);
        bool x_to_x = true, x_to_z = true;
        for (std::size_t i = 0; i < rx; ++i) (d.check_perm[i] < rx ? x_to_z : x_to_x) = false;
        bool z_to_z = true, z_to_x = true;
        for (std::size_t i = 0; i < rz; ++i) (d.check_perm[rx + i] >= rx ? z_to_x : z_to_z) = false;
        if (x_to_x && z_to_z) {
            d.kind = DualityKind::Automorphism;
            out.automorphisms.push_back(std::move(d));
        } else if (x_to_z && z_to_x) {
            d.kind = DualityKind::ZxDuality;
            out.zx_dualities.push_back(std::move(d));
        } else {
            ++out.mixed;
        }
    }
    return out;
}

std::vector<CodeDuality> automorphism_group(const css::CssCode& code, std::size_t cap) {
    return css_census(code, cap).automorphisms;
}

std::vector<CodeDuality> zx_dualities(const css::CssCode& code, std::size_t cap) {
    return css_census(code, cap).zx_dualities;
}

bool is_symmetry(const css::CssCode& code, const CodeDuality& d) {
    std::size_t rx = code.hx.rows(), rz = code.hz.rows();
    if (d.qubit_perm.size() != code.n || d.check_perm.size() != rx + rz) return false;
    auto stacked_row = [&](std::size_t i) -> const f2::BitVector& {
        return i < rx ? code.hx.row(i) : code.hz.row(i - rx);
    };
    for (std::size_t i = 0; i < rx + rz; ++i) {
        f2::BitVector image(code.n);
        stacked_row(i).for_each_set([&](std::size_t q) { image.set(d.qubit_perm[q], true); });
        if (!(image == stacked_row(d.check_perm[i]))) return false;
    }
    return true;
}

DualityProfile profile(const css::CssCode& code, const CodeDuality& tau) {
    if (tau.kind != DualityKind::ZxDuality)
        throw std::invalid_argument("profile: duality of kind zx-duality expected");
    DualityProfile out;
    out.self_inverse = tau.self_inverse();
    f2::BitVector fixed(code.n);
    for (std::size_t q = 0; q < code.n; ++q)
        if (tau.qubit_perm[q] == q) {
            out.fixed_qubits.push_back(q);
            fixed.set(q, true);
        }
    for (std::size_t i = 0; i < code.hx.rows(); ++i) {
        const auto& s = code.hx.row(i);
        out.xcheck_overlap_odd.push_back(s.overlap_parity(fixed));
        std::size_t orbits = 0;
        s.for_each_set([&](std::size_t q) {
            std::uint32_t t = tau.qubit_perm[q];
            if (t > q && s.get(t)) ++orbits;
        });
        out.xcheck_pair_orbits.push_back(orbits);
    }
    return out;
}

Tau0Result find_tau0(const css::CssCode& code, const css::LogicalBasis& basis, std::size_t cap) {
    auto duals = zx_dualities(code, cap);
    Tau0Result res;
    for (const auto& tau : duals) {
        if (!tau.self_inverse()) continue;
        bool pairs = true;
        for (std::size_t i = 0; i < basis.k() && pairs; ++i) {
            f2::BitVector image(code.n);
            basis.zbasis.row(i).for_each_set([&](std::size_t q) { image.set(tau.qubit_perm[q], true); });
            pairs = image == basis.xbasis.row(i);
        }
        if (pairs) {
            if (res.multiplicity == 0) res.tau0 = tau;
            ++res.multiplicity;
        }
    }
    if (res.multiplicity == 0)
        throw std::runtime_error("find_tau0: no self-inverse ZX-duality pairs the given bases");
    return res;
}

CodeDuality compose(const CodeDuality& a, const CodeDuality& b) {
    CodeDuality out;
    out.qubit_perm.resize(a.qubit_perm.size());
    out.check_perm.resize(a.check_perm.size());
    for (std::size_t i = 0; i < a.qubit_perm.size(); ++i) out.qubit_perm[i] = b.qubit_perm[a.qubit_perm[i]];
    for (std::size_t i = 0; i < a.check_perm.size(); ++i) out.check_perm[i] = b.check_perm[a.check_perm[i]];
    bool swaps = (a.kind == DualityKind::ZxDuality) != (b.kind == DualityKind::ZxDuality);
    out.kind = swaps ? DualityKind::ZxDuality : DualityKind::Automorphism;
    return out;
}

CodeDuality inverse(const CodeDuality& d) {
    CodeDuality out;
    out.kind = d.kind;
    out.qubit_perm.resize(d.qubit_perm.size());
    out.check_perm.resize(d.check_perm.size());
    for (std::size_t i = 0; i < d.qubit_perm.size(); ++i) out.qubit_perm[d.qubit_perm[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < d.check_perm.size(); ++i) out.check_perm[d.check_perm[i]] = static_cast<std::uint32_t>(i);
    return out;
}

std::optional<CodeIso> find_isomorphism(const css::CssCode& a, const css::CssCode& b) {
    if (a.n != b.n || a.hx.rows() != b.hx.rows() || a.hz.rows() != b.hz.rows()) return std::nullopt;
    Graph ga = tanner_graph(a), gb = tanner_graph(b);
    std::size_t rx = a.hx.rows(), rz = a.hz.rows();
    std::vector<std::uint32_t> colors(a.n + rx + rz, 0);
    for (std::size_t i = 0; i < rx; ++i) colors[a.n + i] = 1;
    for (std::size_t i = 0; i < rz; ++i) colors[a.n + rx + i] = 2;
    IsoSearch search(ga, gb, 1, true);
    auto perms = search.run(colors, colors);
    if (perms.empty()) return std::nullopt;
    CodeIso iso;
    iso.qubit_map.assign(perms[0].begin(), perms[0].begin() + static_cast<long>(a.n));
    iso.check_map.resize(rx + rz);
    for (std::size_t i = 0; i < rx + rz; ++i) iso.check_map[i] = perms[0][a.n + i] - static_cast<std::uint32_t>(a.n);
    return iso;
}

std::vector<std::pair<Perm, Perm>> classical_tanner_automorphisms(const f2::BitMatrix& h, std::size_t cap) {
    std::size_t n = h.cols(), r = h.rows();
    Graph g;
    g.adj.resize(n + r);
    for (std::size_t i = 0; i < r; ++i)
        h.row(i).for_each_set([&](std::size_t q) {
            g.adj[n + i].push_back(static_cast<std::uint32_t>(q));
            g.adj[q].push_back(static_cast<std::uint32_t>(n + i));
        });
    std::vector<std::uint32_t> colors(n + r, 0);
    for (std::size_t i = 0; i < r; ++i) colors[n + i] = 1;
    IsoSearch search(g, g, cap, false);
    auto perms = search.run(colors, colors);
    std::vector<std::pair<Perm, Perm>> out;
    for (const auto& p : perms) {
        Perm bits(p.begin(), p.begin() + static_cast<long>(n));
        Perm checks(r);
        for (std::size_t i = 0; i < r; ++i) checks[i] = p[n + i] - static_cast<std::uint32_t>(n);
        out.emplace_back(std::move(bits), std::move(checks));
    }
    return out;
}

std::string duality_to_json(const CodeDuality& d) {
    nlohmann::ordered_json j;
    j["qubits"] = d.qubit_perm;
    j["checks"] = d.check_perm;
    j["kind"] = d.kind == DualityKind::Automorphism ? "automorphism" : "zx-duality";
    return j.dump();
}

CodeDuality duality_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    CodeDuality d;
    d.qubit_perm = j.at("qubits").get<Perm>();
    d.check_perm = j.at("checks").get<Perm>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "automorphism")
        d.kind = DualityKind::Automorphism;
    else if (kind == "zx-duality")
        d.kind = DualityKind::ZxDuality;
    else
        throw std::invalid_argument("unknown duality kind: " + kind);
    return d;
}

}  // namespace foldgate::dualities
