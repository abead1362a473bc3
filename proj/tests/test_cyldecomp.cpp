#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "globwb/cyldecomp.hpp"
#include "globwb/expr.hpp"

using namespace globwb;

namespace {

std::vector<PlanarTree> trees_up_to(std::size_t n) {
    std::vector<PlanarTree> out;
    for (std::size_t v = 1; v <= n; ++v)
        for (auto& t : all_trees(v)) out.push_back(std::move(t));
    return out;
}

PlanarTree tree(const char* e) { return tree_from_table(parse_expr(e)); }

std::vector<std::size_t> defined(const std::vector<std::optional<std::size_t>>& r) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i]) out.push_back(i + 1);
    return out;
}

}  // namespace

TEST_CASE("extensions of D2 *0 D1") {
    const auto& ls = enumerate_L(tree("D2 *0 D1"));
    std::vector<std::string> got;
    for (const auto& s : ls) got.push_back(to_string(s.table()));
    CHECK(got == std::vector<std::string>{"[2 1 1 / 0 0]", "[2 2 / 0]", "[2 1 1 / 0 0]", "[2 2 1 / 1 0]", "[3 1 / 0]",
                                          "[2 2 1 / 1 0]", "[1 2 1 / 0 0]"});
}

TEST_CASE("cylinder labels of D2 *0 D1") {
    LabeledZigZag z = cyl_diagram(tree("D2 *0 D1"));
    REQUIRE(z.diagram.length() == 7);
    const auto& d = z.diagram;
    CHECK(d.right[0].render() == "1⊔w");
    CHECK(d.left[1].render() == "1⊔σ");
    CHECK(d.right[1].render() == "1⊔τ");
    CHECK(d.left[2].render() == "1⊔w");
    CHECK(d.right[2].render() == "w⊔1");
    CHECK(d.left[3].render() == "(i0,i2)");
    CHECK(d.right[3].render() == "w⊔1");
    CHECK(d.left[4].render() == "σ⊔1");
    CHECK(d.right[4].render() == "τ⊔1");
    CHECK(d.left[5].render() == "w⊔1");
    CHECK(d.right[5].render() == "(i1,i2)");
    CHECK(d.left[6].render() == "w⊔1");
    CHECK(d.left[0].kind == LabelKind::TreeInclusion);
    CHECK(d.right[6].kind == LabelKind::TreeInclusion);
    CHECK(d.left[4].kind == LabelKind::BoundaryFace);
    CHECK(render_dot(z).find("digraph") != std::string::npos);
    CHECK(to_json(z).contains("bottoms"));
}

TEST_CASE("cylinder tops are A and concrete legs are valid maps") {
    for (const auto& a : trees_up_to(6)) {
        LabeledZigZag z = cyl_diagram(a);
        Table t = table_from_tree(a);
        for (const auto& top : z.diagram.tops) CHECK(top == t);
        for (std::size_t k = 0; k < z.diagram.length(); ++k)
            for (const SumMapLabel* l : {&z.diagram.left[k], &z.diagram.right[k]}) {
                if (!l->concrete()) continue;
                REQUIRE(l->map.has_value());
                l->map->validate();
                CHECK(l->map->domain == realize_table(t).set);
                CHECK(l->map->codomain == realize_table(z.diagram.bottoms[k]).set);
            }
        // Away from the point, the outer legs are tree inclusions.
        if (a.height() == 0) continue;
        CHECK(z.diagram.left.front().kind == LabelKind::TreeInclusion);
        CHECK(z.diagram.right.back().kind == LabelKind::TreeInclusion);
    }
}

TEST_CASE("counting law") {
    for (const auto& a : trees_up_to(9)) CHECK(enumerate_L(a).size() == 2 * a.vertex_count() - 1);
}

TEST_CASE("site order is strict and total") {
    for (const auto& a : trees_up_to(6)) {
        const auto& ls = enumerate_L(a);
        for (std::size_t i = 0; i < ls.size(); ++i)
            for (std::size_t j = 0; j < ls.size(); ++j) {
                CHECK(site_before(a, ls[i], ls[j]) == (i < j));
            }
    }
}

TEST_CASE("boundary restriction of D2 *1 D2 *0 D1") {
    PlanarTree a = tree("D2 *1 D2 *0 D1");
    CHECK(enumerate_L(a).size() == 9);
    CHECK(print_expr(table_from_tree(boundary_tree(a, 1))) == "D1 *0 D1");
    CHECK(defined(restrict_keep_chop(a, 1, Eps::Sigma)) == std::vector<std::size_t>{1, 2, 3, 8, 9});
    // Under tau the rightmost new edge over x1^1 survives instead of the leftmost.
    CHECK(defined(restrict_keep_chop(a, 1, Eps::Tau)) == std::vector<std::size_t>{1, 2, 3, 4, 9});
    CHECK(phi(a, 2, Eps::Sigma).size() == 1);
}

TEST_CASE("phi is injective and monotone") {
    for (const auto& a : trees_up_to(7))
        for (int k = 1; k <= a.height(); ++k)
            for (Eps e : {Eps::Sigma, Eps::Tau}) {
                auto p = phi(a, k, e);
                CHECK(p.size() == enumerate_L(boundary_tree(a, k)).size());
                for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(p[i] < p[i + 1]);
            }
}

TEST_CASE("phi iterates") {
    for (const auto& a : trees_up_to(7))
        for (int k = 2; k <= a.height(); ++k)
            for (Eps e : {Eps::Sigma, Eps::Tau}) {
                auto pk = phi(a, k, e);
                auto p1 = phi(a, 1, e);
                auto rest = phi(boundary_tree(a, 1), k - 1, e);
                for (std::size_t b = 0; b < pk.size(); ++b) CHECK(pk[b] == p1[rest[b]]);
            }
}

TEST_CASE("restriction inverts phi") {
    for (const auto& a : trees_up_to(7))
        for (int k = 1; k <= a.height(); ++k)
            for (Eps e : {Eps::Sigma, Eps::Tau}) {
                auto p = phi(a, k, e);
                auto r = restrict_keep_chop(a, k, e);
                CHECK(defined(r).size() == p.size());
                for (std::size_t b = 0; b < p.size(); ++b) {
                    REQUIRE(r[p[b]].has_value());
                    CHECK(*r[p[b]] == b);
                }
            }
    CHECK_THROWS_AS(phi(point_tree(), 1, Eps::Sigma), DomainError);
}

TEST_CASE("j maps are injective and land in phi") {
    for (const auto& a : trees_up_to(6))
        for (int k = 1; k <= a.height(); ++k)
            for (Eps e : {Eps::Sigma, Eps::Tau}) {
                const auto& ld = enumerate_L(boundary_tree(a, k));
                const auto& la = enumerate_L(a);
                auto p = phi(a, k, e);
                for (std::size_t b = 0; b < ld.size(); ++b) {
                    GlobularSetMap j = j_map(a, b, e, k);
                    j.validate();
                    CHECK(is_injective(j));
                    CHECK(j.domain == realize_table(ld[b].table()).set);
                    CHECK(j.codomain == realize_table(la[p[b]].table()).set);
                }
            }
}

TEST_CASE("compatibility squares") {
    std::size_t concrete = 0, symbolic = 0;
    for (const auto& a : trees_up_to(6))
        for (int k = 1; k <= a.height(); ++k)
            for (Eps e : {Eps::Sigma, Eps::Tau})
                for (std::size_t b = 0; b < enumerate_L(boundary_tree(a, k)).size(); ++b) {
                    SquareReport r = check_compatibility_square(a, b, e, k);
                    CHECK_MESSAGE(r.passed, to_string(table_from_tree(a)), " k=", k, " b=", b, ": ", r.detail);
                    (r.mode == "concrete" ? concrete : symbolic) += 1;
                }
    CHECK(concrete > 0);
    CHECK(symbolic > 0);
}

TEST_CASE("interval decomposition") {
    PlanarTree a = tree("D2 *0 D1");
    IntervalDecomposition d = interval_decomposition(a);
    CHECK(d.root_attached == std::vector<std::size_t>{0, 2, 6});
    CHECK(d.blocks == std::vector<std::vector<std::size_t>>{{1}, {3, 4, 5}});
    for (int n = 1; n <= 4; ++n) {
        IntervalDecomposition dn = interval_decomposition(linear_tree(n));
        CHECK(dn.root_attached == std::vector<std::size_t>{0, 2 * static_cast<std::size_t>(n)});
    }
    for (int k = 1; k <= 5; ++k) {
        PlanarTree wedge{{std::vector<std::size_t>(k, 0)}};
        IntervalDecomposition dk = interval_decomposition(wedge);
        CHECK(dk.root_attached.size() == static_cast<std::size_t>(k) + 1);
        CHECK(dk.blocks.size() == static_cast<std::size_t>(k));
        for (const auto& b : dk.blocks) CHECK(b.size() == 1);
    }
    for (const auto& t : trees_up_to(7)) {
        if (t.height() == 0) continue;
        std::string why;
        CHECK_MESSAGE(interval_blocks_match(t, &why), why);
    }
}

TEST_CASE("degeneracy profile of D2") {
    DegeneracyProfile p = degeneracy_profile(linear_tree(2), 2);
    std::vector<int> r, q;
    for (const auto& e : p.entries) {
        r.push_back(e.r);
        q.push_back(e.q);
    }
    CHECK(r == std::vector<int>{0, 1, 1, 0, -1});
    CHECK(q == std::vector<int>{-1, 0, 1, 1, 0});
    CHECK(source_restriction_indices(p, 2) == std::vector<std::size_t>{0, 3, 4});
    CHECK_THROWS_AS(degeneracy_profile(linear_tree(2), 1), ValidationError);
}

TEST_CASE("profiles give valid stacks") {
    for (const auto& a : trees_up_to(7)) {
        if (a.height() == 0) continue;
        DegeneracyProfile p = degeneracy_profile(a, a.height());
        int rmin = 99, qmin = 99;
        for (const auto& e : p.entries) {
            rmin = std::min(rmin, e.r);
            qmin = std::min(qmin, e.q);
        }
        CHECK(rmin == -1);
        CHECK(qmin == -1);
        std::vector<std::pair<int, int>> pairs;
        for (const auto& s : stack_shapes(p)) {
            CHECK(s.valid());
            pairs.push_back({s.p, s.q});
        }
        CHECK(vcomp_shape(pairs) == std::pair<int, int>{-1, -1});
        // Above the dimension of A every site survives.
        DegeneracyProfile up = degeneracy_profile(a, a.height() + 1);
        CHECK(source_restriction_indices(up, a.height() + 1).size() == p.entries.size());
        auto src = source_restriction_indices(p, a.height());
        auto img = phi(a, 1, Eps::Sigma);
        CHECK(src == img);
        auto tgt = target_restriction_indices(p, a.height());
        CHECK(tgt == phi(a, 1, Eps::Tau));
    }
}

TEST_CASE("cylinder shapes") {
    CHECK(DegenerateCylinderShape{2, 1, 1}.valid());
    CHECK(DegenerateCylinderShape{2, 1, 1}.uncollapsed());
    CHECK_FALSE(DegenerateCylinderShape{2, -1, 1}.valid());
    CHECK_FALSE(DegenerateCylinderShape{2, -2, -1}.valid());
    DegenerateCylinderShape collapsed{1, 1, 0};
    CHECK(collapsed.valid());
    CHECK(collapsed.source_collapsed());
    CHECK_FALSE(collapsed.uncollapsed());
    CHECK(vcomp_shape({{1, 0}, {0, 1}, {1, 1}}) == std::pair<int, int>{0, 0});
    CHECK_THROWS_AS(vcomp_shape({}), ValidationError);
    CHECK_THROWS_AS(vcomp_shape({{2, 0}}), ValidationError);
}
