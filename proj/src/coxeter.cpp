#include "foldgate/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace foldgate::coxeter {

namespace {

int gen_index(const Presentation& p, char c, bool& inverse) {
    inverse = std::isupper(static_cast<unsigned char>(c));
    std::string name(1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (std::size_t i = 0; i < p.gens.size(); ++i)
        if (p.gens[i] == name) return static_cast<int>(i) + 1;
    throw std::invalid_argument(std::string("unknown generator '") + c + "'");
}

Word invert(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& g : out) g = -g;
    return out;
}

Word repeat(const Word& w, long n) {
    Word base = n < 0 ? invert(w) : w;
    if (n < 0) n = -n;
    Word out;
    for (long i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
}

// word := item* ; item := (letter | '(' word ')') ['^' ['-'] digits]
Word parse_word_impl(const Presentation& p, const std::string& s, std::size_t& pos) {
    Word out;
    while (pos < s.size()) {
        char c = s[pos];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ')') break;
        Word item;
        if (c == '(') {
            ++pos;
            item = parse_word_impl(p, s, pos);
            if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("unbalanced '(' in word");
            ++pos;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            bool inv = false;
            int g = gen_index(p, c, inv);
            item.push_back(inv ? -g : g);
            ++pos;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
        }
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            bool neg = pos < s.size() && s[pos] == '-';
            if (neg) ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("'^' must be followed by an integer");
            long n = std::stol(s.substr(start, pos - start));
            item = repeat(item, neg ? -n : n);
        }
        out.insert(out.end(), item.begin(), item.end());
    }
    return out;
}

}  // namespace

Word Presentation::parse_word(const std::string& w) const {
    std::size_t pos = 0;
    Word out = parse_word_impl(*this, w, pos);
    if (pos != w.size()) throw std::invalid_argument("trailing characters in word: " + w);
    return out;
}

Presentation Presentation::parse(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rel_words, sub_words;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::string tok;
        if (head == "gens:") {
            while (ls >> tok) {
                if (tok.size() != 1 || !std::islower(static_cast<unsigned char>(tok[0])))
                    throw std::invalid_argument("generators must be single lowercase letters");
                p.gens.push_back(tok);
            }
        } else if (head == "rels:") {
            while (ls >> tok) rel_words.push_back(tok);
        } else if (head == "sub:") {
            while (ls >> tok) sub_words.push_back(tok);
        } else {
            throw std::invalid_argument("unknown line in presentation: " + head);
        }
    }
    if (p.gens.empty()) throw std::invalid_argument("presentation has no generators");
    for (const auto& w : rel_words) p.relators.push_back(p.parse_word(w));
    for (const auto& w : sub_words) p.subgroup.push_back(p.parse_word(w));
    return p;
}

std::vector<std::uint32_t> CosetTable::gen_perm(std::size_t g) const {
    std::vector<std::uint32_t> perm(n_cosets);
    for (std::size_t c = 0; c < n_cosets; ++c) perm[c] = table[c][2 * g];
    return perm;
}

namespace {

constexpr std::uint32_t kUndef = 0xffffffffu;

// HLT-style enumerator with row filling; see Holt, Handbook of Computational
// Group Theory, ch. 5. Coincidences are processed eagerly through a queue,
// keeping the smaller coset index as the representative.
class Enumerator {
public:
    Enumerator(std::size_t n_gens, std::size_t limit) : ncols_(2 * n_gens), limit_(limit) {
        new_coset();  // coset 0 = subgroup
    }

    static std::size_t col(int g) { return g > 0 ? 2 * (g - 1) : 2 * (-g - 1) + 1; }
    static std::size_t inv_col(std::size_t c) { return c ^ 1u; }

    std::uint32_t rep(std::uint32_t c) {
        while (p_[c] != c) c = p_[c] = p_[p_[c]];
        return c;
    }

    void run(const std::vector<Word>& relators, const std::vector<Word>& subgroup) {
        for (const auto& w : subgroup) scan_and_fill(0, w);
        for (std::uint32_t c = 0; c < table_.size(); ++c) {
            if (rep(c) != c) continue;
            for (const auto& w : relators) {
                scan_and_fill(c, w);
                if (rep(c) != c) break;
            }
            if (rep(c) != c) continue;
            for (std::size_t ci = 0; ci < ncols_; ++ci)
                if (entry(c, ci) == kUndef) define(c, ci);
        }
    }

    CosetTable finish(std::size_t n_gens) {
        // renumber live cosets by breadth-first order from coset 0
        std::vector<std::uint32_t> num(table_.size(), kUndef);
        std::deque<std::uint32_t> queue{rep(0)};
        num[rep(0)] = 0;
        std::uint32_t next = 1;
        std::vector<std::uint32_t> order{rep(0)};
        while (!queue.empty()) {
            std::uint32_t c = queue.front();
            queue.pop_front();
            for (std::size_t ci = 0; ci < ncols_; ++ci) {
                std::uint32_t d = rep(entry(c, ci));
                if (num[d] == kUndef) {
                    num[d] = next++;
                    order.push_back(d);
                    queue.push_back(d);
                }
            }
        }
        CosetTable out;
        out.n_gens = n_gens;
        out.n_cosets = order.size();
        out.table.assign(order.size(), std::vector<std::uint32_t>(ncols_));
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t ci = 0; ci < ncols_; ++ci)
                out.table[i][ci] = num[rep(entry(order[i], ci))];
        return out;
    }

private:
    std::size_t ncols_;
    std::size_t limit_;
    std::size_t live_ = 0;
    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> p_;

    std::uint32_t& entry(std::uint32_t c, std::size_t ci) { return table_[c][ci]; }

    std::uint32_t new_coset() {
        if (live_ >= limit_)
            throw std::runtime_error("coset enumeration exceeded limit of " + std::to_string(limit_));
        table_.emplace_back(ncols_, kUndef);
        p_.push_back(static_cast<std::uint32_t>(table_.size() - 1));
        ++live_;
        return static_cast<std::uint32_t>(table_.size() - 1);
    }

    void set_edge(std::uint32_t a, std::size_t ci, std::uint32_t b) {
        entry(a, ci) = b;
        entry(b, inv_col(ci)) = a;
    }

    std::uint32_t define(std::uint32_t c, std::size_t ci) {
        std::uint32_t d = new_coset();
        set_edge(c, ci, d);
        return d;
    }

    void merge(std::uint32_t a, std::uint32_t b, std::deque<std::uint32_t>& q) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        p_[b] = a;
        --live_;
        q.push_back(b);
    }

    // Holt, Handbook of CGT, COINCIDENCE: replay the dead coset's edges at the
    // class representatives, queueing any secondary coincidences this exposes.
    void coincidence(std::uint32_t a, std::uint32_t b) {
        std::deque<std::uint32_t> q;
        merge(a, b, q);
        while (!q.empty()) {
            std::uint32_t y = q.front();
            q.pop_front();
            for (std::size_t ci = 0; ci < ncols_; ++ci) {
                std::uint32_t d = entry(y, ci);
                if (d == kUndef) continue;
                entry(d, inv_col(ci)) = kUndef;
                std::uint32_t mu = rep(y), nu = rep(d);
                if (entry(mu, ci) != kUndef)
                    merge(nu, rep(entry(mu, ci)), q);
                else if (entry(nu, inv_col(ci)) != kUndef)
                    merge(mu, rep(entry(nu, inv_col(ci))), q);
                else
                    set_edge(mu, ci, nu);
            }
        }
    }

    void scan_and_fill(std::uint32_t c, const Word& w) {
        c = rep(c);
        if (w.empty()) return;
        std::size_t i = 0, j = w.size();
        std::uint32_t f = c, b = c;
        for (;;) {
            while (i < j && entry(f, col(w[i])) != kUndef) f = rep(entry(f, col(w[i]))), ++i;
            if (i == j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i && entry(b, inv_col(col(w[j - 1]))) != kUndef)
                b = rep(entry(b, inv_col(col(w[j - 1])))), --j;
            if (j == i) {
                if (f != b) coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                set_edge(f, col(w[i]), b);
                return;
            }
            define(f, col(w[i]));
        }
    }
};

}  // namespace

CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup, std::size_t limit) {
    Enumerator e(p.gens.size(), limit);
    e.run(p.relators, subgroup);
    return e.finish(p.gens.size());
}

namespace {

// phi: group element (regular coset) -> H-coset, via synchronized traversal from 0
std::vector<std::uint32_t> coset_map(const CosetTable& regular, const CosetTable& sub) {
    std::vector<std::uint32_t> phi(regular.n_cosets, kUndef);
    phi[0] = 0;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t c = queue.front();
        queue.pop_front();
        for (std::size_t ci = 0; ci < 2 * regular.n_gens; ++ci) {
            std::uint32_t d = regular.table[c][ci];
            std::uint32_t img = sub.table[phi[c]][ci];
            if (phi[d] == kUndef) {
                phi[d] = img;
                queue.push_back(d);
            } else if (phi[d] != img) {
                throw std::logic_error("inconsistent coset map");
            }
        }
    }
    return phi;
}

f2::BitMatrix incidence_parity(const std::vector<std::uint32_t>& phiA,
                               const std::vector<std::uint32_t>& phiB,
                               std::size_t nA, std::size_t nB) {
    f2::BitMatrix m(nA, nB);
    for (std::size_t g = 0; g < phiA.size(); ++g) m.row(phiA[g]).flip(phiB[g]);
    return m;
}

struct RotationTables {
    CosetTable faces, edges, vertices, regular;
};

RotationTables rotation_tables(const Presentation& rot, std::size_t limit) {
    if (rot.gens.size() != 2)
        throw std::invalid_argument("hyperbolic construction expects a 2-generator rotation presentation");
    RotationTables t;
    t.faces = enumerate(rot, {{+1}}, limit);
    t.edges = enumerate(rot, {{+1, +2}}, limit);
    t.vertices = enumerate(rot, {{+2}}, limit);
    t.regular = enumerate(rot, {}, limit);
    return t;
}

css::CssCode code_from_tables(const RotationTables& t, const std::string& label) {
    auto phiF = coset_map(t.regular, t.faces);
    auto phiE = coset_map(t.regular, t.edges);
    auto phiV = coset_map(t.regular, t.vertices);
    css::CssCode code;
    code.n = t.edges.n_cosets;
    code.hz = incidence_parity(phiF, phiE, t.faces.n_cosets, t.edges.n_cosets);
    code.hx = incidence_parity(phiV, phiE, t.vertices.n_cosets, t.edges.n_cosets);
    code.label = label;
    css::require_valid(code);
    return code;
}

// index-2 reflection extension: generators a,b,c with r = ab, s = bc
Presentation reflection_extension(const Presentation& rot) {
    Presentation full;
    full.gens = {"a", "b", "c"};
    full.relators = {{1, 1}, {2, 2}, {3, 3}};
    auto subst = [](int g) -> Word {
        switch (g) {
            case 1: return {1, 2};
            case -1: return {2, 1};
            case 2: return {2, 3};
            default: return {3, 2};
        }
    };
    for (const auto& rel : rot.relators) {
        Word w;
        for (int g : rel) {
            Word piece = subst(g);
            w.insert(w.end(), piece.begin(), piece.end());
        }
        full.relators.push_back(std::move(w));
    }
    return full;
}

}  // namespace

css::CssCode hyperbolic_code(const Presentation& rotation, std::size_t limit) {
    return code_from_tables(rotation_tables(rotation, limit), "hyperbolic");
}

HyperbolicSurface hyperbolic_surface(const Presentation& rotation, std::size_t limit) {
    RotationTables t = rotation_tables(rotation, limit);
    HyperbolicSurface out;
    out.code = code_from_tables(t, "hyperbolic");
    out.faces = t.faces.n_cosets;
    out.edges = t.edges.n_cosets;
    out.vertices = t.vertices.n_cosets;
    out.rotation_order = t.regular.n_cosets;

    Presentation full = reflection_extension(rotation);
    CosetTable freg = enumerate(full, {}, 2 * limit);
    CosetTable fedge = enumerate(full, {{1}, {3}}, 2 * limit);  // subgroup <a, c>
    out.reflection_order = freg.n_cosets;

    // homomorphism rotation -> reflection group on regular representations
    std::vector<std::uint32_t> img(t.regular.n_cosets, kUndef);
    img[0] = 0;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t c = queue.front();
        queue.pop_front();
        const std::pair<int, Word> steps[2] = {{1, {1, 2}}, {2, {2, 3}}};
        for (const auto& [g, word] : steps) {
            std::uint32_t d = t.regular.act(c, g);
            std::uint32_t fi = img[c];
            for (int x : word) fi = freg.act(fi, x);
            if (img[d] == kUndef) {
                img[d] = fi;
                queue.push_back(d);
            } else if (img[d] != fi) {
                throw std::logic_error("rotation group does not embed in the reflection extension");
            }
        }
    }

    // align rotation edge labels with reflection <a,c>-cosets
    auto phiE = coset_map(t.regular, t.edges);
    auto phiFE = coset_map(freg, fedge);
    std::vector<std::uint32_t> to_full(out.edges, kUndef);
    for (std::size_t g = 0; g < img.size(); ++g) {
        std::uint32_t e = phiE[g];
        std::uint32_t fe = phiFE[img[g]];
        if (to_full[e] == kUndef)
            to_full[e] = fe;
        else if (to_full[e] != fe)
            throw std::logic_error("edge alignment failed");
    }
    std::vector<std::uint32_t> from_full(fedge.n_cosets, kUndef);
    for (std::size_t e = 0; e < out.edges; ++e) from_full[to_full[e]] = static_cast<std::uint32_t>(e);

    out.reflections.resize(3);
    for (std::size_t g = 0; g < 3; ++g) {
        out.reflections[g].resize(out.edges);
        for (std::size_t e = 0; e < out.edges; ++e)
            out.reflections[g][e] = from_full[fedge.table[to_full[e]][2 * g]];
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> symmetry_action(const Presentation& rotation, std::size_t limit) {
    return hyperbolic_surface(rotation, limit).reflections;
}

namespace {

const char* kQuotients[] = {
    // Bring's code [[30,8,3]]; the extra relator (r s^-1)^3 is (abcb)^3 in reflections
    "gens: r s\nrels: r^5 s^5 (rs)^2 (rs^-1)^3\n",
    // [[40,10,4]]
    "gens: r s\nrels: r^5 s^5 (rs)^2 (RSrs)^2\n",
    // [[80,18,5]]
    "gens: r s\nrels: r^5 s^5 (rs)^2 rS^2r^2Sr^2S^2\n",
};

}  // namespace

Presentation quotient_55(std::size_t index) {
    if (index >= quotient_55_count()) throw std::out_of_range("no such {5,5} quotient preset");
    return Presentation::parse(kQuotients[index]);
}

std::size_t quotient_55_count() { return sizeof(kQuotients) / sizeof(kQuotients[0]); }

}  // namespace foldgate::coxeter
