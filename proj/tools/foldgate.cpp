// foldgate: construct CSS codes, discover ZX-dualities, synthesize
// fold-transversal gates and classify the logical gate group.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "foldgate/constructors.hpp"
#include "foldgate/coxeter.hpp"
#include "foldgate/css.hpp"
#include "foldgate/dualities.hpp"
#include "foldgate/gates.hpp"
#include "foldgate/groups.hpp"
#include "foldgate/report.hpp"

using namespace foldgate;

namespace {

int write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fold-transversal gate toolkit for CSS codes"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write output here instead of stdout");

    // ---- build ----
    auto* build = app.add_subcommand("build", "construct a code and emit its JSON");
    build->require_subcommand(1);

    auto* b_bring = build->add_subcommand("bring", "Bring's code [[30,8,3]] via coset enumeration");
    bool bring_basis = false;
    b_bring->add_flag("--with-basis", bring_basis, "attach the deterministic logical basis");

    auto* b_hyp = build->add_subcommand("hyperbolic", "a {5,5} hyperbolic quotient code");
    std::size_t hyp_index = 0;
    std::string hyp_file;
    b_hyp->add_option("--index", hyp_index, "preset index (0 = Bring, 1 = [[40,10,4]], 2 = [[80,18,5]])");
    b_hyp->add_option("--presentation", hyp_file, "rotation-presentation text file (overrides --index)");

    auto* b_hgp = build->add_subcommand("hgp", "hypergraph product of a classical seed with itself");
    std::string hgp_seed, hgp_seed_b;
    b_hgp->add_option("--seed", hgp_seed, "classical code JSON (default: the [6,2,4] seed)");
    b_hgp->add_option("--seed-b", hgp_seed_b, "second factor (defaults to the first)");

    auto* b_surface = build->add_subcommand("surface", "planar surface code with its diagonal fold");
    std::size_t surface_d = 3;
    b_surface->add_option("--d", surface_d, "distance")->required();

    auto* b_stack = build->add_subcommand("stack", "direct sum of a code with itself");
    std::string stack_in;
    b_stack->add_option("code", stack_in, "input code JSON")->required();

    // ---- analyze ----
    auto* analyze = app.add_subcommand("analyze", "duality / gate / group analysis report");
    std::string an_in;
    analyze->add_option("code", an_in, "input code JSON")->required();
    report::Options ropts;
    bool want_dualities = false, want_gates = false, want_group = false, want_invariants = false;
    long long wmax = -1;
    std::string basis_file;
    analyze->add_flag("--dualities", want_dualities, "enumerate dualities and gate eligibility");
    analyze->add_flag("--gates", want_gates, "emit the logical gate matrices");
    analyze->add_flag("--group", want_group, "exact order of the generated gate group");
    analyze->add_flag("--invariants", want_invariants, "invariant-subspace decomposition");
    analyze->add_option("--distance", wmax, "search the distance up to this weight");
    analyze->add_option("--basis", basis_file, "code JSON carrying zbasis/xbasis to use as the basis");

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
    oracle->require_subcommand(1);
    auto* o_dist = oracle->add_subcommand("distance", "distance by unbounded enumeration (n <= 24)");
    std::string od_in;
    o_dist->add_option("code", od_in)->required();
    auto* o_group = oracle->add_subcommand("group", "matrix group order by naive closure");
    std::string og_in;
    o_group->add_option("group", og_in)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (b_bring->parsed()) {
            auto code = coxeter::hyperbolic_code(coxeter::quotient_55(0));
            code.label = "bring";
            if (bring_basis) {
                auto basis = css::logical_bases(code);
                return write_out(css::to_json(code, &basis), out_path);
            }
            return write_out(css::to_json(code), out_path);
        }
        if (b_hyp->parsed()) {
            coxeter::Presentation p = hyp_file.empty()
                                          ? coxeter::quotient_55(hyp_index)
                                          : coxeter::Presentation::parse(slurp(hyp_file));
            auto code = coxeter::hyperbolic_code(p);
            code.label = "hyperbolic";
            return write_out(css::to_json(code), out_path);
        }
        if (b_hgp->parsed()) {
            constructors::ClassicalCode a;
            if (hgp_seed.empty()) {
                a.n = 6;
                a.h = f2::BitMatrix(4, 6);
                for (auto [r, c] : {std::pair<int, int>{0, 0}, {0, 2}, {0, 4}, {1, 0}, {1, 1},
                                    {2, 2}, {2, 3}, {3, 4}, {3, 5}})
                    a.h.set(r, c, true);
            } else {
                a = constructors::classical_from_json(slurp(hgp_seed));
            }
            constructors::ClassicalCode b =
                hgp_seed_b.empty() ? a : constructors::classical_from_json(slurp(hgp_seed_b));
            auto code = constructors::hypergraph_product(a, b);
            return write_out(css::to_json(code), out_path);
        }
        if (b_surface->parsed()) {
            auto surf = constructors::surface_code(surface_d);
            std::string code_json = css::to_json(surf.code);
            // append the diagonal duality alongside the code
            std::string dual = dualities::duality_to_json(surf.diagonal);
            return write_out(code_json.substr(0, code_json.size() - 2) + ",\n \"diagonal_duality\": " +
                                 dual + "\n}",
                             out_path);
        }
        if (b_stack->parsed()) {
            auto loaded = css::load_code_file(stack_in);
            auto code = css::direct_sum(loaded.code, loaded.code);
            return write_out(css::to_json(code), out_path);
        }
        if (analyze->parsed()) {
            std::string bytes = slurp(an_in);
            auto loaded = css::from_json(bytes);
            ropts.dualities = want_dualities;
            ropts.gates = want_gates;
            ropts.group = want_group;
            ropts.invariants = want_invariants;
            if (wmax >= 0) ropts.distance_wmax = static_cast<std::size_t>(wmax);
            if (!basis_file.empty()) {
                auto bl = css::load_code_file(basis_file);
                if (!bl.basis) throw std::invalid_argument("--basis file carries no zbasis/xbasis");
                ropts.basis = bl.basis;
                ropts.basis_id = basis_file;
            } else if (loaded.basis) {
                ropts.basis = loaded.basis;
                ropts.basis_id = "embedded";
            }
            return write_out(report::analyze(loaded.code, ropts, bytes), out_path);
        }
        if (o_dist->parsed()) {
            auto loaded = css::load_code_file(od_in);
            if (loaded.code.n > 24) throw std::invalid_argument("oracle distance: n too large");
            auto d = css::distance(loaded.code, loaded.code.n);
            std::ostringstream os;
            os << "{\"distance\": " << (d ? std::to_string(*d) : "null") << "}\n";
            return write_out(os.str(), out_path);
        }
        if (o_group->parsed()) {
            auto grp = groups::group_from_json(slurp(og_in));
            // naive closure, intentionally independent of the BSGS machinery
            std::set<std::string> seen;
            std::vector<f2::BitMatrix> frontier{f2::BitMatrix::identity(grp.dim)};
            auto key = [](const f2::BitMatrix& m) {
                std::string s;
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (auto w : m.row(i).words()) s += std::to_string(w) + ",";
                return s;
            };
            seen.insert(key(frontier[0]));
            while (!frontier.empty()) {
                auto g = frontier.back();
                frontier.pop_back();
                for (const auto& h : grp.generators) {
                    auto x = g * h;
                    if (seen.insert(key(x)).second) {
                        frontier.push_back(x);
                        if (seen.size() > 2000000) throw std::runtime_error("closure exceeds 2e6 elements");
                    }
                }
            }
            std::ostringstream os;
            os << "{\"order\": \"" << seen.size() << "\"}\n";
            return write_out(os.str(), out_path);
        }
    } catch (const gates::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dualities::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
