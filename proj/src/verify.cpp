#include "globwb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "globwb/cyldecomp.hpp"
#include "globwb/expr.hpp"
#include "globwb/generators.hpp"
#include "globwb/globset.hpp"
#include "globwb/trees.hpp"
#include "globwb/zigzag.hpp"

namespace globwb {

namespace {

using nlohmann::json;

struct Outcome {
    bool ok = true;
    std::size_t cases = 0;
    std::string detail;
    json counterexample;

    void fail(const std::string& why, json payload) {
        if (!ok) return;
        ok = false;
        detail = why;
        counterexample = std::move(payload);
    }
};

std::vector<PlanarTree> trees_within(std::size_t max_vertices, int max_dim) {
    std::vector<PlanarTree> out;
    for (std::size_t v = 1; v <= max_vertices; ++v)
        for (auto& t : all_trees(v))
            if (t.height() <= max_dim) out.push_back(std::move(t));
    return out;
}

json tree_payload(const PlanarTree& t) { return {{"table", to_string(table_from_tree(t))}}; }

Outcome cylinder_example() {
    Outcome o;
    PlanarTree a = tree_from_table(parse_expr("D2 *0 D1"));
    LabeledZigZag z = cyl_diagram(a);
    const std::vector<std::string> tables = {"[2 1 1 / 0 0]", "[2 2 / 0]", "[2 1 1 / 0 0]", "[2 2 1 / 1 0]",
                                             "[3 1 / 0]",     "[2 2 1 / 1 0]", "[1 2 1 / 0 0]"};
    std::vector<std::string> got;
    for (const auto& t : z.diagram.bottoms) got.push_back(to_string(t));
    ++o.cases;
    if (got != tables) o.fail("bottom row differs", {{"got", got}, {"want", tables}});

    // Inner labels read left to right: z into B1, then (v, z) into B2..B6, then v into B7.
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < z.diagram.bottoms.size(); ++k) {
        if (k > 0) labels.push_back(z.diagram.left[k].render());
        if (k + 1 < z.diagram.bottoms.size()) labels.push_back(z.diagram.right[k].render());
    }
    const std::vector<std::string> expected = {"1⊔w", "1⊔σ", "1⊔τ", "1⊔w", "w⊔1", "(i0,i2)",
                                             "w⊔1", "σ⊔1", "τ⊔1", "w⊔1", "(i1,i2)", "w⊔1"};
    ++o.cases;
    if (labels != expected) o.fail("edge labels differ", {{"got", labels}, {"want", expected}});
    const std::vector<std::string> listed = {"1⊔w", "1⊔σ", "1⊔τ", "w⊔1", "(i0,i2)", "σ⊔1", "τ⊔1", "(i1,i2)", "w⊔1"};
    std::size_t pos = 0;
    for (const auto& l : labels)
        if (pos < listed.size() && l == listed[pos]) ++pos;
    ++o.cases;
    if (pos != listed.size()) o.fail("label pattern is not a subsequence of the labels", {{"got", labels}});
    ++o.cases;
    const auto& d = z.diagram;
    bool outer = d.left.front().kind == LabelKind::TreeInclusion && d.right.back().kind == LabelKind::TreeInclusion &&
                 d.left[4].kind == LabelKind::BoundaryFace && d.right[4].kind == LabelKind::BoundaryFace;
    if (!outer) o.fail("outer legs are not tree inclusions or the (3 1;0) legs are not boundary faces", {});
    return o;
}

Outcome restriction_example() {
    Outcome o;
    PlanarTree a = tree_from_table(parse_expr("D2 *1 D2 *0 D1"));
    const auto& ls = enumerate_L(a);
    ++o.cases;
    if (ls.size() != 9) o.fail("|L(A)| is not 9", {{"size", ls.size()}});
    std::string b1 = print_expr(boundary_table(table_from_tree(a)));
    std::string b2 = print_expr(table_from_tree(boundary_tree(a, 1)));
    ++o.cases;
    if (b1 != "D1 *0 D1" || b2 != "D1 *0 D1") o.fail("boundary differs", {{"table", b1}, {"tree", b2}});
    auto r = restrict_keep_chop(a, 1, Eps::Sigma);
    std::vector<std::size_t> defined;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i]) defined.push_back(i + 1);
    ++o.cases;
    if (defined != std::vector<std::size_t>{1, 2, 3, 8, 9}) o.fail("restriction domain differs", {{"got", defined}});
    auto p = phi(a, 1, Eps::Sigma);
    std::vector<std::size_t> image;
    for (auto i : p) image.push_back(i + 1);
    ++o.cases;
    if (image != std::vector<std::size_t>{1, 2, 3, 8, 9}) o.fail("phi image differs", {{"got", image}});
    return o;
}

Outcome suspension_example() {
    Outcome o;
    Table t{{2, 2, 1, 2}, {1, 0, 0}}, want{{3, 3, 2, 3}, {2, 1, 1}};
    ++o.cases;
    if (!(shift_table(t) == want)) o.fail("table shift differs", {{"got", to_string(shift_table(t))}});
    ++o.cases;
    Table via_tree = table_from_tree(suspend_tree(tree_from_table(t)));
    if (!(via_tree == want)) o.fail("tree suspension differs", {{"got", to_string(via_tree)}});
    ++o.cases;
    if (!(suspend_tree(tree_from_table(t)) == tree_from_table(want))) o.fail("suspended trees differ", {});
    return o;
}

Outcome vertex_order_example() {
    Outcome o;
    // Levels: two vertices at height 1; one at height 2 over the right one; three at height 3 over it.
    PlanarTree t{{{0, 0}, {1}, {0, 0, 0}}};
    std::vector<std::string> got;
    for (Vertex v : vertex_order(t)) got.push_back(vertex_name(v));
    const std::vector<std::string> want = {"x1^0", "x2^1", "x1^2", "x3^3", "x2^3", "x1^3", "x1^1"};
    ++o.cases;
    if (got != want) o.fail("vertex order differs", {{"got", got}, {"want", want}});
    return o;
}

Outcome counting_law(std::size_t max_vertices) {
    Outcome o;
    for (std::size_t v = 1; v <= max_vertices && o.ok; ++v)
        for (const auto& t : all_trees(v)) {
            ++o.cases;
            std::size_t n = enumerate_L(t).size();
            if (n != 2 * v - 1) {
                o.fail("|L(T)| != 2|v(T)|-1", {{"table", to_string(table_from_tree(t))}, {"size", n}});
                break;
            }
        }
    return o;
}

Outcome oracle_equivalence(const VerifyOptions& opt) {
    Outcome o;
    for (const auto& a : trees_within(opt.max_vertices, opt.max_dim)) {
        for (int k = 1; k <= a.height(); ++k)
            for (Eps e : {Eps::Sigma, Eps::Tau}) {
                ++o.cases;
                auto p = phi(a, k, e);
                auto r = restrict_keep_chop(a, k, e);
                json payload = tree_payload(a);
                payload["k"] = k;
                payload["eps"] = eps_name(e);
                std::size_t defined = std::count_if(r.begin(), r.end(), [](const auto& x) { return x.has_value(); });
                if (defined != p.size()) {
                    o.fail("restriction domain size differs from |L(d^k A)|", payload);
                    return o;
                }
                for (std::size_t j = 0; j < p.size(); ++j)
                    if (!r[p[j]] || *r[p[j]] != j) {
                        payload["site"] = j + 1;
                        o.fail("phi and keep/discard/chop disagree", payload);
                        return o;
                    }
            }
    }
    return o;
}

Outcome compatibility_squares(const VerifyOptions& opt, std::size_t& concrete, std::size_t& symbolic) {
    Outcome o;
    for (const auto& a : trees_within(opt.max_vertices, opt.max_dim)) {
        for (int k = 1; k <= a.height(); ++k) {
            std::size_t sites = enumerate_L(boundary_tree(a, k)).size();
            for (Eps e : {Eps::Sigma, Eps::Tau})
                for (std::size_t b = 0; b < sites; ++b) {
                    ++o.cases;
                    SquareReport rep = check_compatibility_square(a, b, e, k);
                    (rep.mode == "concrete" ? concrete : symbolic) += 1;
                    if (!rep.passed) {
                        json payload = tree_payload(a);
                        payload["k"] = k;
                        payload["eps"] = eps_name(e);
                        payload["site"] = b + 1;
                        payload["mode"] = rep.mode;
                        o.fail(rep.detail, payload);
                        return o;
                    }
                }
        }
    }
    return o;
}

Outcome factorization_system(const VerifyOptions& opt) {
    Outcome o;
    Rng rng(opt.seed);
    for (std::size_t i = 0; i < opt.samples; ++i) {
        GlobularSetMap f = random_map(rng, 12, 4);
        int n = static_cast<int>(rng() % 5);
        ++o.cases;
        json payload{{"map", to_json(f)}, {"n", n}};
        Factorization fg = factorize(f, n);
        if (!(compose(fg.g, fg.h) == f)) return o.fail("g.h != f", payload), o;
        if (!classify_map(fg.h, n).bijective) return o.fail("h is not n-bijective", payload), o;
        if (!classify_map(fg.g, n).fully_faithful) return o.fail("g is not n-fully faithful", payload), o;
        if (!is_isomorphism(factorize(fg.h, n).g)) return o.fail("refactoring h gives a non-invertible right part", payload), o;
        if (!is_isomorphism(factorize(fg.g, n).h)) return o.fail("refactoring g gives a non-invertible left part", payload), o;
        GlobularSetMap rx = random_relabel(rng, f.domain), ry = random_relabel(rng, f.codomain);
        // f' = ry f rx^{-1}, computed directly on components.
        GlobularSetMap f2{rx.codomain, ry.codomain, f.comp};
        for (std::size_t k = 0; k < f.comp.size(); ++k)
            for (Cell x = 0; x < f.comp[k].size(); ++x) f2.comp[k][rx.comp[k][x]] = ry.comp[k][f.comp[k][x]];
        f2.validate();
        if (!isomorphic(factorize(f2, n).h.codomain, fg.h.codomain))
            return o.fail("relabelled factorization has a non-isomorphic middle object", payload), o;
    }
    return o;
}

Outcome zigzag_chunking(const VerifyOptions& opt) {
    Outcome o;
    Rng rng(opt.seed + 1);
    for (std::size_t i = 0; i < opt.samples; ++i) {
        std::size_t len = rng() % 7;
        SetZigZag z = random_zigzag(rng, len, 4, 3);
        auto part = random_partition(rng, len);
        ++o.cases;
        FiniteGlobularSet whole = colimit_zigzag(z).apex;
        FiniteGlobularSet chunked = colimit_zigzag(chunk(z, part)).apex;
        if (!isomorphic(whole, chunked)) {
            o.fail("colimit changes under chunking", {{"zigzag", to_json(z)}, {"partition", part}});
            return o;
        }
    }
    for (std::size_t i = 0; i < opt.samples / 4; ++i) {
        Table t = random_table(rng, 5, 4);
        ++o.cases;
        if (!isomorphic(colimit_zigzag(glueing_zigzag(t)).apex, realize_table(t).set)) {
            o.fail("glueing zig-zag colimit differs from the realization", {{"table", to_string(t)}});
            return o;
        }
    }
    return o;
}

Outcome degeneracy_minima(const VerifyOptions& opt) {
    Outcome o;
    for (const auto& a : trees_within(opt.max_vertices, opt.max_dim)) {
        ++o.cases;
        const int n = a.height();
        DegeneracyProfile p = degeneracy_profile(a, n);
        int rmin = 1 << 20, qmin = 1 << 20;
        for (const auto& e : p.entries) {
            rmin = std::min(rmin, e.r);
            qmin = std::min(qmin, e.q);
        }
        if (rmin != -1 || qmin != -1) {
            o.fail("profile minima are not (-1,-1)", {{"table", to_string(table_from_tree(a))}, {"r", rmin}, {"q", qmin}});
            return o;
        }
        if (n == 0) continue;
        for (Eps e : {Eps::Sigma, Eps::Tau}) {
            auto img = phi(a, 1, e);
            std::sort(img.begin(), img.end());
            auto got = e == Eps::Sigma ? source_restriction_indices(p, n) : target_restriction_indices(p, n);
            if (got != img) {
                o.fail("surviving indices differ from the phi image",
                       {{"table", to_string(table_from_tree(a))}, {"eps", eps_name(e)}, {"got", got}, {"image", img}});
                return o;
            }
        }
    }
    return o;
}

Outcome sphere_counts() {
    Outcome o;
    for (int n = 0; n <= 8; ++n) {
        ++o.cases;
        FiniteGlobularSet s = sphere(n);
        bool counts = s.counts == std::vector<std::size_t>(n, 2);
        GlobularSetMap inc = sphere_inclusion(n);
        inc.validate();
        bool inj = is_injective(inc) && (n == 0 || classify_map(inc, n - 1).bijective);
        if (!counts || !inj) {
            o.fail("sphere counts or inclusion", {{"n", n}});
            return o;
        }
        // Latching oracle: S^{n} is D_n glued to D_n along S^{n-1}.
        Diagram d;
        d.objects = {disk(n), disk(n), sphere(n)};
        d.edges = {{2, 0, sphere_inclusion(n)}, {2, 1, sphere_inclusion(n)}};
        if (n < 8 && !isomorphic(colimit(d).apex, sphere(n + 1))) {
            o.fail("latching pushout differs from the sphere", {{"n", n}});
            return o;
        }
    }
    return o;
}

struct Spec {
    const char* name;
    double budget;
};

const Spec kSpecs[] = {
    {"extensions of D2 *0 D1 and edge labels", 1},
    {"boundary restriction of D2 *1 D2 *0 D1", 1},
    {"suspension shifts the table", 1},
    {"vertex order of the example tree", 1},
    {"counting law |L(T)| = 2|v(T)| - 1", 30},
    {"phi agrees with inverse of keep/discard/chop", 60},
    {"compatibility squares commute", 60},
    {"(bij_n, ff_n) factorization", 30},
    {"zig-zag colimit invariant under chunking", 30},
    {"degeneracy minima and surviving sources", 30},
    {"sphere cell counts and inclusion", 1},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kSpecs)); }

CheckResult run_criterion(int id, const VerifyOptions& opt) {
    if (id < 1 || id > criterion_count()) throw ValidationError("no criterion " + std::to_string(id));
    CheckResult r;
    r.id = id;
    r.name = kSpecs[id - 1].name;
    r.budget = kSpecs[id - 1].budget;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string extra;
    try {
        switch (id) {
            case 1: o = cylinder_example(); break;
            case 2: o = restriction_example(); break;
            case 3: o = suspension_example(); break;
            case 4: o = vertex_order_example(); break;
            case 5: o = counting_law(opt.count_vertices); break;
            case 6: o = oracle_equivalence(opt); break;
            case 7: {
                std::size_t c = 0, s = 0;
                o = compatibility_squares(opt, c, s);
                extra = std::to_string(c) + " concrete, " + std::to_string(s) + " symbolic";
                break;
            }
            case 8: o = factorization_system(opt); break;
            case 9: o = zigzag_chunking(opt); break;
            case 10: o = degeneracy_minima(opt); break;
            case 11: o = sphere_counts(); break;
        }
    } catch (const std::exception& ex) {
        o.fail(std::string("exception: ") + ex.what(), {});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.within_budget = r.seconds <= r.budget;
    r.passed = o.ok && r.within_budget;
    r.cases = o.cases;
    r.detail = o.ok ? extra : o.detail;
    if (o.ok && !r.within_budget) r.detail = "exceeded time budget";
    r.counterexample = o.counterexample;
    return r;
}

std::vector<CheckResult> run_all(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int i = 1; i <= criterion_count(); ++i) out.push_back(run_criterion(i, opt));
    return out;
}

std::string format_line(const CheckResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << r.cases << " cases, " << r.seconds
       << "s / " << r.budget << "s)";
    if (!r.detail.empty()) os << "  " << r.detail;
    return os.str();
}

json to_json(const CheckResult& r) {
    json j{{"id", r.id},           {"name", r.name},         {"passed", r.passed},
           {"seconds", r.seconds}, {"budget", r.budget},     {"within_budget", r.within_budget},
           {"cases", r.cases},     {"detail", r.detail}};
    if (!r.counterexample.is_null()) j["counterexample"] = r.counterexample;
    return j;
}

}  // namespace globwb
