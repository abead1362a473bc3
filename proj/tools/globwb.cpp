#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "globwb/cyldecomp.hpp"
#include "globwb/errors.hpp"
#include "globwb/expr.hpp"
#include "globwb/verify.hpp"

using namespace globwb;
using nlohmann::json;

namespace {

struct Common {
    bool json_out = false;
    bool dot = false;
};

Eps parse_eps(const std::string& s) {
    if (s == "sigma" || s == "s" || s == "σ") return Eps::Sigma;
    if (s == "tau" || s == "t" || s == "τ") return Eps::Tau;
    throw ValidationError("--eps must be sigma or tau");
}

void print_sites(const std::vector<ExtensionSite>& ls) {
    for (std::size_t i = 0; i < ls.size(); ++i)
        std::cout << i + 1 << "  " << to_string(ls[i].table()) << "  new " << vertex_name(ls[i].added) << " under "
                  << vertex_name(ls[i].parent) << "\n";
}

json sites_json(const std::vector<ExtensionSite>& ls) {
    json arr = json::array();
    for (std::size_t i = 0; i < ls.size(); ++i)
        arr.push_back({{"index", i + 1},
                       {"table", to_json(ls[i].table())},
                       {"parent", vertex_name(ls[i].parent)},
                       {"slot", ls[i].slot},
                       {"height", ls[i].height}});
    return arr;
}

json indices_json(const std::vector<std::size_t>& v) {
    json arr = json::array();
    for (auto i : v) arr.push_back(i + 1);
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"globwb: globular sums, planar trees and cylinder decompositions"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_flag("--json", c.json_out, "JSON output");
    app.add_flag("--dot", c.dot, "Graphviz output where supported");

    std::string expr;
    auto add_expr = [&](CLI::App* sub) { sub->add_option("expr", expr, "e.g. \"D2 *0 D1\" or \"[2 1 / 0]\"")->required(); };

    auto* tree = app.add_subcommand("tree", "planar tree of a globular sum");
    add_expr(tree);
    auto* table = app.add_subcommand("table", "normalized table of dimensions");
    add_expr(table);
    auto* realize = app.add_subcommand("realize", "cell counts of the realized globular set");
    add_expr(realize);
    auto* enuml = app.add_subcommand("enum-l", "one-leaf extensions in order");
    add_expr(enuml);
    auto* cyl = app.add_subcommand("cyl", "cylinder zig-zag with edge labels");
    add_expr(cyl);
    int k = 1;
    auto* bnd = app.add_subcommand("boundary", "iterated boundary");
    add_expr(bnd);
    bnd->add_option("-k", k, "iterations")->check(CLI::PositiveNumber);
    std::string eps = "sigma";
    auto* phic = app.add_subcommand("phi", "positions of L(boundary) in L(A)");
    add_expr(phic);
    phic->add_option("-k", k)->check(CLI::PositiveNumber);
    phic->add_option("--eps", eps);
    auto* restr = app.add_subcommand("restrict", "keep/discard/chop restriction of L(A)");
    add_expr(restr);
    restr->add_option("-k", k)->check(CLI::PositiveNumber);
    restr->add_option("--eps", eps);
    int n = -1;
    auto* prof = app.add_subcommand("profile", "degeneracy profile");
    add_expr(prof);
    prof->add_option("-n", n, "ambient dimension (default: dim A)");
    std::string map_file;
    auto* fact = app.add_subcommand("factorize", "(bij_n, ff_n) factorization of a map given as JSON");
    fact->add_option("file", map_file)->required()->check(CLI::ExistingFile);
    fact->add_option("-n", n)->required();
    VerifyOptions vo;
    if (const char* s = std::getenv("GLOBWB_SEED")) vo.seed = std::strtoull(s, nullptr, 10);
    bool all = false;
    std::vector<int> ids;
    auto* ver = app.add_subcommand("verify", "run acceptance checks");
    ver->add_flag("--all", all, "run every check");
    ver->add_option("ids", ids, "check numbers");
    ver->add_option("--max-vertices", vo.max_vertices);
    ver->add_option("--max-dim", vo.max_dim);
    ver->add_option("--samples", vo.samples);
    ver->add_option("--seed", vo.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*ver) {
            if (all || ids.empty())
                for (int i = 1; i <= criterion_count(); ++i) ids.push_back(i);
            bool ok = true;
            json out = json::array();
            for (int id : ids) {
                CheckResult r = run_criterion(id, vo);
                ok = ok && r.passed;
                if (c.json_out)
                    out.push_back(to_json(r));
                else {
                    std::cout << format_line(r) << "\n";
                    if (!r.passed && !r.counterexample.is_null()) std::cout << "    " << r.counterexample.dump() << "\n";
                }
            }
            if (c.json_out) std::cout << out.dump(2) << "\n";
            return ok ? 0 : 1;
        }
        if (*fact) {
            std::ifstream in(map_file);
            json j;
            try {
                j = json::parse(in);
            } catch (const json::exception& e) {
                throw ParseError(0, e.what());
            }
            GlobularSetMap f = map_from_json(j);
            Factorization fg = factorize(f, n);
            if (c.json_out) {
                std::cout << json{{"h", to_json(fg.h)}, {"g", to_json(fg.g)}}.dump(2) << "\n";
            } else {
                std::cout << "middle: " << to_json(fg.h.codomain).dump() << "\n";
                MapClass h = classify_map(fg.h, n), g = classify_map(fg.g, n);
                std::cout << "h " << n << "-bijective: " << (h.bijective ? "yes" : "no") << "\n";
                std::cout << "g " << n << "-fully faithful: " << (g.fully_faithful ? "yes" : "no") << "\n";
            }
            return 0;
        }

        Table t = parse_expr(expr);
        PlanarTree a = tree_from_table(t);
        if (*tree) {
            if (c.dot)
                std::cout << render_dot(a);
            else if (c.json_out)
                std::cout << to_json(a).dump(2) << "\n";
            else
                std::cout << render_ascii(a);
        } else if (*table) {
            if (c.json_out)
                std::cout << to_json(t).dump(2) << "\n";
            else
                std::cout << to_string(t) << "\n" << print_expr(t) << "\n";
        } else if (*realize) {
            const Realization& r = realize_table(t);
            if (c.json_out)
                std::cout << to_json(r.set).dump(2) << "\n";
            else {
                for (std::size_t d = 0; d < r.set.counts.size(); ++d)
                    std::cout << "dim " << d << ": " << r.set.counts[d] << "\n";
            }
        } else if (*enuml) {
            const auto& ls = enumerate_L(a);
            if (c.json_out)
                std::cout << sites_json(ls).dump(2) << "\n";
            else
                print_sites(ls);
        } else if (*cyl) {
            LabeledZigZag z = cyl_diagram(a);
            if (c.dot)
                std::cout << render_dot(z);
            else if (c.json_out)
                std::cout << to_json(z).dump(2) << "\n";
            else
                for (std::size_t i = 0; i < z.diagram.bottoms.size(); ++i)
                    std::cout << i + 1 << "  " << to_string(z.diagram.bottoms[i]) << "  v: " << z.diagram.left[i].render()
                              << "  z: " << z.diagram.right[i].render() << "\n";
        } else if (*bnd) {
            PlanarTree b = boundary_tree(a, k);
            Table bt = table_from_tree(b);
            if (c.json_out)
                std::cout << to_json(bt).dump(2) << "\n";
            else
                std::cout << to_string(bt) << "\n" << print_expr(bt) << "\n";
        } else if (*phic) {
            auto p = phi(a, k, parse_eps(eps));
            if (c.json_out)
                std::cout << indices_json(p).dump() << "\n";
            else
                for (std::size_t i = 0; i < p.size(); ++i) std::cout << i + 1 << " -> " << p[i] + 1 << "\n";
        } else if (*restr) {
            auto r = restrict_keep_chop(a, k, parse_eps(eps));
            json arr = json::array();
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (c.json_out)
                    arr.push_back(r[i] ? json(*r[i] + 1) : json(nullptr));
                else
                    std::cout << i + 1 << " -> " << (r[i] ? std::to_string(*r[i] + 1) : std::string("discard")) << "\n";
            }
            if (c.json_out) std::cout << arr.dump() << "\n";
        } else if (*prof) {
            DegeneracyProfile p = degeneracy_profile(a, n < 0 ? a.height() : n);
            if (c.json_out) {
                json arr = json::array();
                for (const auto& e : p.entries) arr.push_back({{"r", e.r}, {"q", e.q}, {"d", e.d}});
                std::cout << json{{"dim", p.dim}, {"n", p.n}, {"entries", arr}}.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < p.entries.size(); ++i)
                    std::cout << i + 1 << "  r=" << p.entries[i].r << " q=" << p.entries[i].q << "\n";
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.position << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
