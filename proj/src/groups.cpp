#include "foldgate/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace foldgate::groups {

F2MatrixGroup make_group(std::size_t dim, std::vector<BitMatrix> gens) {
    for (const auto& g : gens) {
        if (g.rows() != dim || g.cols() != dim)
            throw std::invalid_argument("generator has wrong dimensions");
        if (!f2::inverse(g)) throw std::invalid_argument("generator is singular");
    }
    return F2MatrixGroup{dim, std::move(gens)};
}

// ---------------------------------------------------------------------------
// BSGS on the right action over nonzero vectors of F2^dim (dim <= 32).
// Elements are row-mask arrays for speed; the chain stores inverse transversal
// matrices per orbit point so sifting is one lookup and one multiply per level.
// ---------------------------------------------------------------------------

namespace {

using Elem = std::vector<std::uint32_t>;  // rows_ i as bit masks over dim columns

Elem to_elem(const BitMatrix& m) {
    Elem e(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.row(i).for_each_set([&](std::size_t j) { e[i] |= 1u << j; });
    return e;
}

inline std::uint32_t act(std::uint32_t p, const Elem& g) {
    std::uint32_t acc = 0;
    while (p) {
        acc ^= g[static_cast<std::size_t>(__builtin_ctz(p))];
        p &= p - 1;
    }
    return acc;
}

Elem mul(const Elem& a, const Elem& b) {
    Elem out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = act(a[i], b);
    return out;
}

Elem inv(const Elem& a) {
    std::size_t n = a.size();
    std::vector<std::uint64_t> aug(n);
    for (std::size_t i = 0; i < n; ++i) aug[i] = a[i] | (std::uint64_t(1) << (32 + i));
    std::size_t r = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = r;
        while (piv < n && !((aug[piv] >> c) & 1)) ++piv;
        if (piv == n) throw std::logic_error("singular element in BSGS");
        std::swap(aug[r], aug[piv]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != r && ((aug[i] >> c) & 1)) aug[i] ^= aug[r];
        ++r;
    }
    Elem out(n, 0);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(aug[i] >> 32);
    return out;
}

Elem ident(std::size_t n) {
    Elem e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = 1u << i;
    return e;
}

bool is_ident(const Elem& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != (1u << i)) return false;
    return true;
}

std::uint32_t first_moved(const Elem& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != (1u << i)) return 1u << i;
    return 0;
}

}  // namespace

struct BSGSChain::Impl {
    std::size_t dim;
    Elem id;
    std::vector<std::uint32_t> bases;
    std::vector<std::vector<Elem>> sgens;     // sgens[i] fixes bases[0..i-1]
    std::vector<std::vector<std::uint32_t>> orbit_pts;
    std::vector<std::vector<std::int32_t>> orbit_idx;  // point -> slot, dense over 2^dim
    std::vector<std::vector<Elem>> tinv;               // slot -> transversal inverse

    explicit Impl(const F2MatrixGroup& g) : dim(g.dim), id(ident(g.dim)) {
        if (dim == 0 || dim > 20)
            throw std::invalid_argument("BSGS supports dimensions 1..20 (vector action would be too large)");
        for (const auto& gen : g.generators) {
            Elem e = to_elem(gen);
            if (!is_ident(e)) add_gen(0, e, g.generators.size());
        }
        schreier_sims();
    }

    // greedy first base point: representative of the largest orbit
    std::uint32_t largest_orbit_point(const std::vector<Elem>& gens) const {
        std::vector<bool> seen(std::size_t(1) << dim, false);
        std::uint32_t best_pt = 1;
        std::size_t best_size = 0;
        for (std::uint32_t p = 1; p < (std::uint32_t(1) << dim); ++p) {
            if (seen[p]) continue;
            std::vector<std::uint32_t> orb{p};
            seen[p] = true;
            for (std::size_t i = 0; i < orb.size(); ++i)
                for (const auto& g : gens) {
                    std::uint32_t q = act(orb[i], g);
                    if (!seen[q]) {
                        seen[q] = true;
                        orb.push_back(q);
                    }
                }
            if (orb.size() > best_size) {
                best_size = orb.size();
                best_pt = *std::min_element(orb.begin(), orb.end());
            }
        }
        return best_pt;
    }

    void ensure_level(std::size_t i) {
        while (bases.size() <= i) {
            bases.push_back(0);
            sgens.emplace_back();
            orbit_pts.emplace_back();
            orbit_idx.emplace_back();
            tinv.emplace_back();
        }
    }

    void add_gen(std::size_t i, const Elem& g, std::size_t total_gens) {
        ensure_level(i);
        if (bases[i] == 0)
            bases[i] = (i == 0 && total_gens > 0) ? 0 : first_moved(g);  // filled below for level 0
        sgens[i].push_back(g);
        if (i == 0 && bases[0] == 0) {
            // defer: choose after all input generators are present
            return;
        }
        rebuild_orbit(i);
    }

    void rebuild_orbit(std::size_t i) {
        std::uint32_t b = bases[i];
        auto& pts = orbit_pts[i];
        auto& idx = orbit_idx[i];
        auto& ti = tinv[i];
        pts.assign(1, b);
        idx.assign(std::size_t(1) << dim, -1);
        idx[b] = 0;
        ti.assign(1, id);
        std::vector<Elem> t{id};
        std::vector<Elem> ginvs;
        ginvs.reserve(sgens[i].size());
        for (const auto& g : sgens[i]) ginvs.push_back(inv(g));
        for (std::size_t qi = 0; qi < pts.size(); ++qi) {
            std::uint32_t p = pts[qi];
            for (std::size_t gi = 0; gi < sgens[i].size(); ++gi) {
                std::uint32_t q = act(p, sgens[i][gi]);
                if (idx[q] < 0) {
                    idx[q] = static_cast<std::int32_t>(pts.size());
                    pts.push_back(q);
                    t.push_back(mul(t[static_cast<std::size_t>(idx[p])], sgens[i][gi]));
                    ti.push_back(mul(ginvs[gi], ti[static_cast<std::size_t>(idx[p])]));
                }
            }
        }
    }

    // returns (residue, level it failed at); residue == id means membership
    std::pair<Elem, std::size_t> strip(Elem g, std::size_t start) const {
        for (std::size_t i = start; i < bases.size(); ++i) {
            std::uint32_t p = act(bases[i], g);
            std::int32_t slot = orbit_idx[i][p];
            if (slot < 0) return {std::move(g), i};
            g = mul(g, tinv[i][static_cast<std::size_t>(slot)]);
        }
        return {std::move(g), bases.size()};
    }

    void schreier_sims() {
        if (bases.empty()) return;
        if (bases[0] == 0) {
            bases[0] = largest_orbit_point(sgens[0]);
            rebuild_orbit(0);
        }
        std::size_t i = bases.size();
        while (i-- > 0) {
            bool restart = false;
            const auto pts_snapshot = orbit_pts[i];
            for (std::size_t pi = 0; pi < pts_snapshot.size() && !restart; ++pi) {
                std::uint32_t p = pts_snapshot[pi];
                std::int32_t slot = orbit_idx[i][p];
                if (slot < 0) continue;
                for (std::size_t gi = 0; gi < sgens[i].size(); ++gi) {
                    const Elem& x = sgens[i][gi];
                    std::uint32_t q = act(p, x);
                    Elem sg = mul(mul(tinvless(i, static_cast<std::size_t>(slot)), x),
                                  tinv[i][static_cast<std::size_t>(orbit_idx[i][q])]);
                    if (is_ident(sg)) continue;
                    auto [res, j] = strip(std::move(sg), i + 1);
                    if (!is_ident(res)) {
                        if (j == bases.size()) {
                            ensure_level(j);
                            bases[j] = first_moved(res);
                        }
                        for (std::size_t l = i + 1; l <= j; ++l) {
                            ensure_level(l);
                            if (bases[l] == 0) bases[l] = first_moved(res);
                            sgens[l].push_back(res);
                            rebuild_orbit(l);
                        }
                        i = j + 1;  // loop decrement re-enters at level j
                        restart = true;
                        break;
                    }
                }
            }
            if (restart) continue;
        }
    }

    // transversal element for slot (recomputed from tinv to avoid storing both)
    Elem tinvless(std::size_t level, std::size_t slot) const { return inv(tinv[level][slot]); }
};

BSGSChain::BSGSChain(const F2MatrixGroup& g) : impl_(std::make_shared<Impl>(g)) {}

mpz_class BSGSChain::order() const {
    mpz_class n = 1;
    for (const auto& pts : impl_->orbit_pts) n *= static_cast<unsigned long>(pts.size());
    return n;
}

bool BSGSChain::contains(const BitMatrix& m) const {
    if (m.rows() != impl_->dim || m.cols() != impl_->dim) throw std::invalid_argument("dimension mismatch");
    if (!f2::inverse(m)) throw std::invalid_argument("matrix is singular");
    auto [res, lvl] = impl_->strip(to_elem(m), 0);
    (void)lvl;
    return is_ident(res);
}

std::size_t BSGSChain::base_length() const { return impl_->bases.size(); }

std::vector<std::size_t> BSGSChain::orbit_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& pts : impl_->orbit_pts) out.push_back(pts.size());
    return out;
}

mpz_class order(const F2MatrixGroup& g) { return BSGSChain(g).order(); }

bool contains(const F2MatrixGroup& g, const BitMatrix& m) { return BSGSChain(g).contains(m); }

mpz_class sp_order(std::size_t k) {
    if (k < 1) throw std::invalid_argument("sp_order: k >= 1 required");
    mpz_class n = mpz_class(1) << static_cast<unsigned long>(k * k);
    for (std::size_t i = 1; i <= k; ++i) n *= (mpz_class(1) << (2 * i)) - 1;
    return n;
}

mpz_class index_in_sp(const F2MatrixGroup& g, std::size_t k) {
    if (g.dim != 2 * k) throw std::invalid_argument("index_in_sp: dimension must be 2k");
    BitMatrix omega(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        omega.set(i, k + i, true);
        omega.set(k + i, i, true);
    }
    for (const auto& gen : g.generators)
        if (!(gen * omega * gen.transposed() == omega))
            throw std::invalid_argument("index_in_sp: generator is not symplectic for the standard form");
    mpz_class total = sp_order(k);
    mpz_class ord = order(g);
    if (total % ord != 0)
        throw std::logic_error("index_in_sp: group order does not divide |Sp| (inconsistent input)");
    return total / ord;
}

const char* subspace_class_name(SubspaceClass c) {
    switch (c) {
        case SubspaceClass::Symplectic: return "symplectic";
        case SubspaceClass::Lagrangian: return "lagrangian";
        case SubspaceClass::Isotropic: return "isotropic";
        default: return "other";
    }
}

SubspaceClass classify_subspace(const BitMatrix& basis, const BitMatrix& omega) {
    BitMatrix gram = basis * omega * basis.transposed();
    bool zero = true;
    for (std::size_t i = 0; i < gram.rows() && zero; ++i) zero = gram.row(i).none();
    if (zero) {
        return 2 * basis.rows() == omega.rows() ? SubspaceClass::Lagrangian : SubspaceClass::Isotropic;
    }
    if (f2::inverse(gram)) return SubspaceClass::Symplectic;
    return SubspaceClass::Other;
}

BitMatrix spin(const std::vector<BitVector>& seeds, const F2MatrixGroup& g) {
    f2::Rref acc;
    acc.rows = BitMatrix(0, g.dim);
    std::deque<BitVector> frontier;
    for (const auto& s : seeds) {
        BitVector red = acc.reduce(s);
        if (!red.none()) {
            acc.insert(red);
            frontier.push_back(red);
        }
    }
    while (!frontier.empty()) {
        BitVector v = frontier.front();
        frontier.pop_front();
        for (const auto& gen : g.generators) {
            BitVector red = acc.reduce(gen.apply_row(v));
            if (!red.none()) {
                acc.insert(red);
                frontier.push_back(red);
            }
        }
    }
    return acc.rows;
}

namespace {

// --- F2 polynomial helpers (little-endian bit masks, degree <= 40) ----------

int pdeg(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

std::uint64_t pmod(std::uint64_t a, std::uint64_t b) {
    int db = pdeg(b);
    while (a && pdeg(a) >= db) a ^= b << (pdeg(a) - db);
    return a;
}

std::uint64_t pdivq(std::uint64_t a, std::uint64_t b) {
    std::uint64_t q = 0;
    int db = pdeg(b);
    while (a && pdeg(a) >= db) {
        int sh = pdeg(a) - db;
        q |= std::uint64_t(1) << sh;
        a ^= b << sh;
    }
    return q;
}

const std::vector<std::uint64_t>& irreducibles_to_16() {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> irr;
        for (std::uint64_t c = 2; c < (std::uint64_t(1) << 17); ++c) {
            bool ok = pdeg(c) >= 1;
            for (auto q : irr) {
                if (pdeg(q) > pdeg(c) / 2) break;
                if (pmod(c, q) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) irr.push_back(c);
        }
        return irr;
    }();
    return table;
}

std::vector<std::pair<std::uint64_t, std::size_t>> factor_poly(std::uint64_t p) {
    std::vector<std::pair<std::uint64_t, std::size_t>> out;
    for (auto q : irreducibles_to_16()) {
        if (pdeg(q) > pdeg(p)) break;
        std::size_t mult = 0;
        while (pdeg(p) >= pdeg(q) && pmod(p, q) == 0) {
            p = pdivq(p, q);
            ++mult;
        }
        if (mult) out.emplace_back(q, mult);
        if (pdeg(p) < 1) break;
    }
    if (pdeg(p) >= 1) out.emplace_back(p, 1);  // residual has no factor of degree <= 16
    return out;
}

BitVector flatten(const BitMatrix& m) {
    std::size_t d = m.rows();
    BitVector v(d * d);
    for (std::size_t i = 0; i < d; ++i)
        m.row(i).for_each_set([&](std::size_t j) { v.set(i * d + j, true); });
    return v;
}

std::uint64_t min_poly(const BitMatrix& w) {
    std::size_t d = w.rows();
    std::vector<BitMatrix> powers{BitMatrix::identity(d)};
    f2::Rref seen;
    seen.rows = BitMatrix(0, d * d);
    seen.insert(flatten(powers[0]));
    for (;;) {
        BitMatrix nxt = powers.back() * w;
        BitVector flat = flatten(nxt);
        if (seen.contains(flat)) {
            // express nxt as a combination of earlier powers
            BitMatrix sys(0, powers.size());
            for (std::size_t col = 0; col < d * d; ++col) {
                BitVector row(powers.size());
                for (std::size_t i = 0; i < powers.size(); ++i)
                    if (flatten(powers[i]).get(col)) row.set(i, true);
                sys.append_row(row);
            }
            BitVector rhs(d * d);
            rhs = flat;
            auto sol = f2::solve(sys, rhs);
            if (!sol) throw std::logic_error("min_poly: inconsistent dependence");
            std::uint64_t p = std::uint64_t(1) << powers.size();
            for (std::size_t i = 0; i < powers.size(); ++i)
                if (sol->get(i)) p |= std::uint64_t(1) << i;
            return p;
        }
        seen.insert(flat);
        powers.push_back(std::move(nxt));
    }
}

BitMatrix eval_poly(std::uint64_t p, const BitMatrix& w) {
    std::size_t d = w.rows();
    BitMatrix acc(d, d);
    BitMatrix pw = BitMatrix::identity(d);
    for (int i = 0; i <= pdeg(p); ++i) {
        if ((p >> i) & 1) acc = acc ^ pw;
        pw = pw * w;
    }
    return acc;
}

int class_rank(SubspaceClass c) {
    switch (c) {
        case SubspaceClass::Symplectic: return 0;
        case SubspaceClass::Lagrangian: return 1;
        case SubspaceClass::Isotropic: return 2;
        default: return 3;
    }
}

std::vector<BitVector> rows_of(const BitMatrix& m) {
    std::vector<BitVector> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

bool rows_less(const BitMatrix& a, const BitMatrix& b) {
    for (std::size_t i = 0; i < std::min(a.rows(), b.rows()); ++i) {
        if (a.row(i) < b.row(i)) return true;
        if (b.row(i) < a.row(i)) return false;
    }
    return a.rows() < b.rows();
}

}  // namespace

RestrictedGroup restrict_to(const F2MatrixGroup& g, const BitMatrix& basis) {
    BitMatrix sys = basis.transposed();  // dim x d
    RestrictedGroup out;
    out.subspace = basis;
    out.group.dim = basis.rows();
    for (const auto& gen : g.generators) {
        BitMatrix img = basis * gen;
        BitMatrix c(0, basis.rows());
        for (std::size_t i = 0; i < img.rows(); ++i) {
            auto sol = f2::solve(sys, img.row(i));
            if (!sol) throw std::invalid_argument("restrict_to: subspace is not invariant");
            c.append_row(*sol);
        }
        out.group.generators.push_back(std::move(c));
    }
    return out;
}

SubspaceDecomposition invariant_subspaces(const F2MatrixGroup& g, const BitMatrix& omega,
                                          bool randomized_fallback) {
    std::size_t d = g.dim;
    std::map<std::vector<BitVector>, BitMatrix> found;  // rref rows -> basis, dedup

    auto consider = [&](const BitMatrix& space) {
        if (space.rows() == 0 || space.rows() >= d) return;
        found.emplace(rows_of(space), space);
    };

    for (std::size_t i = 0; i < d; ++i)
        consider(spin({BitVector::unit(d, i)}, g));

    // deterministic word list over the generators
    std::vector<BitMatrix> words;
    const auto& gens = g.generators;
    for (const auto& a : gens) words.push_back(a);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j) words.push_back(gens[i] * gens[j]);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            words.push_back(gens[i] ^ gens[j]);
            words.push_back((gens[i] * gens[j]) ^ gens[j]);
        }
    if (randomized_fallback) {
        std::uint64_t state = 0x9e3779b97f4a7c15ull;  // fixed-seed xorshift for reproducibility
        auto rnd = [&state] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int t = 0; t < 64 && !gens.empty(); ++t) {
            BitMatrix w = gens[rnd() % gens.size()];
            for (int s = 0; s < 3; ++s) w = w * gens[rnd() % gens.size()];
            words.push_back(w ^ gens[rnd() % gens.size()]);
        }
    }

    for (const auto& w : words) {
        std::uint64_t mp = min_poly(w);
        auto factors = factor_poly(mp);
        if (factors.size() < 2 && (factors.empty() || factors[0].second < 2)) continue;
        for (const auto& [q, mult] : factors) {
            BitMatrix qw = eval_poly(q, w);
            BitMatrix power = BitMatrix::identity(d);
            for (std::size_t t = 0; t < mult; ++t) power = power * qw;
            BitMatrix ker = f2::kernel_basis(power);
            for (std::size_t i = 0; i < ker.rows(); ++i)
                consider(spin({ker.row(i)}, g));
        }
    }

    SubspaceDecomposition out;
    for (const auto& [rows, basis] : found)
        out.invariant_subspaces.push_back({basis, classify_subspace(basis, omega)});
    std::sort(out.invariant_subspaces.begin(), out.invariant_subspaces.end(),
              [&](const InvariantSubspace& a, const InvariantSubspace& b) {
                  if (a.basis.rows() != b.basis.rows()) return a.basis.rows() < b.basis.rows();
                  int ra = class_rank(a.cls), rb = class_rank(b.cls);
                  if (ra != rb) return ra < rb;
                  return rows_less(a.basis, b.basis);
              });

    // greedy direct-sum merge
    f2::Rref span;
    span.rows = BitMatrix(0, d);
    std::vector<InvariantSubspace> comps;
    for (const auto& cand : out.invariant_subspaces) {
        bool independent = true;
        for (std::size_t i = 0; i < cand.basis.rows() && independent; ++i)
            independent = !span.contains(cand.basis.row(i));
        if (!independent) continue;
        std::size_t before = span.pivots.size();
        f2::Rref trial = span;
        for (std::size_t i = 0; i < cand.basis.rows(); ++i) trial.insert(cand.basis.row(i));
        if (trial.pivots.size() != before + cand.basis.rows()) continue;
        span = std::move(trial);
        comps.push_back(cand);
        if (span.pivots.size() == d) break;
    }
    if (span.pivots.size() == d && !comps.empty()) {
        out.components = std::move(comps);
    } else {
        InvariantSubspace full{BitMatrix::identity(d), classify_subspace(BitMatrix::identity(d), omega)};
        out.components = {full};
    }
    return out;
}

bool preserves_theta(const BitMatrix& m, const BitVector& d, std::size_t k) {
    for (std::size_t i = 0; i < 2 * k; ++i) {
        const BitVector& img = m.row(i);
        bool t = false;
        // z.x part of theta on the image row
        for (std::size_t j = 0; j < k; ++j)
            if (img.get(j) && img.get(k + j)) t = !t;
        if (img.overlap_parity(d)) t = !t;
        if (t != d.get(i)) return false;
    }
    return true;
}

std::vector<BitVector> invariant_theta_diagonals(const F2MatrixGroup& g, std::size_t k) {
    std::vector<BitVector> out;
    if (g.dim != 2 * k) throw std::invalid_argument("invariant_theta_diagonals: dim != 2k");
    if (2 * k > 20) throw std::invalid_argument("invariant_theta_diagonals: 2k too large to enumerate");
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << (2 * k)); ++bits) {
        BitVector d(2 * k);
        for (std::size_t i = 0; i < 2 * k; ++i)
            if ((bits >> i) & 1) d.set(i, true);
        bool ok = true;
        for (const auto& gen : g.generators)
            if (!preserves_theta(gen, d, k)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(d);
    }
    return out;
}

bool theta_arf(const BitVector& d, std::size_t k) {
    bool arf = false;
    for (std::size_t i = 0; i < k; ++i)
        if (d.get(i) && d.get(k + i)) arf = !arf;
    return arf;
}

BitMatrix theta_adapted_basis(const BitVector& d, std::size_t k) {
    std::size_t m = 2 * k;
    auto theta = [&](const BitVector& v) {
        bool t = false;
        for (std::size_t j = 0; j < k; ++j)
            if (v.get(j) && v.get(k + j)) t = !t;
        return t != v.overlap_parity(d);
    };
    auto omega = [&](const BitVector& u, const BitVector& v) {
        bool t = false;
        for (std::size_t j = 0; j < k; ++j) {
            if (u.get(j) && v.get(k + j)) t = !t;
            if (u.get(k + j) && v.get(j)) t = !t;
        }
        return t;
    };
    auto all_vectors = [&]() {
        std::vector<BitVector> vs;
        for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << m); ++bits) {
            BitVector v(m);
            for (std::size_t i = 0; i < m; ++i)
                if ((bits >> i) & 1) v.set(i, true);
            vs.push_back(std::move(v));
        }
        return vs;
    };
    std::vector<BitVector> pool = all_vectors();
    std::vector<BitVector> chosen;
    while (chosen.size() < m) {
        bool advanced = false;
        for (const auto& a : pool) {
            if (theta(a)) continue;
            bool orth = true;
            for (const auto& u : chosen) orth &= !omega(a, u);
            if (!orth) continue;
            f2::Rref r;
            r.rows = BitMatrix(0, m);
            for (const auto& u : chosen) r.insert(u);
            if (r.contains(a)) continue;
            for (const auto& b : pool) {
                if (theta(b) || b == a) continue;
                if (!omega(a, b)) continue;
                bool orth2 = true;
                for (const auto& u : chosen) orth2 &= !omega(b, u);
                if (!orth2) continue;
                chosen.push_back(a);
                chosen.push_back(b);
                advanced = true;
                break;
            }
            if (advanced) break;
        }
        if (!advanced) throw std::runtime_error("theta_adapted_basis: no hyperbolic pair found (minus-type form?)");
    }
    // reorder pairs (a_1, b_1), ..., (a_k, b_k) into rows a_1..a_k, b_1..b_k
    BitMatrix t(0, m);
    for (std::size_t i = 0; i < k; ++i) t.append_row(chosen[2 * i]);
    for (std::size_t i = 0; i < k; ++i) t.append_row(chosen[2 * i + 1]);
    return t;
}

std::string group_to_json(const F2MatrixGroup& g) {
    nlohmann::ordered_json j;
    j["dim"] = g.dim;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& m : g.generators) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::string bits(m.cols(), '0');
            m.row(i).for_each_set([&](std::size_t c) { bits[c] = '1'; });
            rows.push_back(bits);
        }
        gens.push_back(rows);
    }
    j["generators"] = gens;
    j["order"] = order(g).get_str();
    return j.dump(1);
}

F2MatrixGroup group_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<BitMatrix> gens;
    for (const auto& rows : j.at("generators")) {
        BitMatrix m(dim, dim);
        std::size_t i = 0;
        for (const auto& row : rows) {
            std::string bits = row.get<std::string>();
            for (std::size_t c = 0; c < bits.size(); ++c)
                if (bits[c] == '1') m.set(i, c, true);
            ++i;
        }
        gens.push_back(std::move(m));
    }
    return make_group(dim, std::move(gens));
}

}  // namespace foldgate::groups
