#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "globwb/trees.hpp"

using namespace globwb;

namespace {

std::vector<PlanarTree> trees_up_to(std::size_t n) {
    std::vector<PlanarTree> out;
    for (std::size_t v = 1; v <= n; ++v)
        for (auto& t : all_trees(v)) out.push_back(std::move(t));
    return out;
}

// Preorder, children visited right to left.
std::vector<Vertex> reverse_preorder(const PlanarTree& t) {
    std::vector<Vertex> out;
    std::function<void(Vertex)> go = [&](Vertex v) {
        out.push_back(v);
        auto [lo, hi] = t.children(v);
        for (std::size_t c = hi; c > lo; --c) go({v.height + 1, c - 1});
    };
    go({0, 0});
    return out;
}

}  // namespace

TEST_CASE("tree counts follow the Catalan numbers") {
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (std::size_t n = 1; n <= 9; ++n) CHECK(all_trees(n).size() == catalan[n - 1]);
    for (const auto& t : all_trees(6)) {
        t.validate();
        CHECK(t.vertex_count() == 6);
    }
}

TEST_CASE("table and tree round trip") {
    for (const auto& t : trees_up_to(8)) {
        Table tab = table_from_tree(t);
        CHECK(tab.valid());
        CHECK(tab.size() == leaves(t).size());
        CHECK(tree_from_table(tab) == t);
        CHECK(table_from_tree(tree_from_table(tab)) == tab);
    }
    CHECK(table_from_tree(point_tree()) == Table{{0}, {}});
    CHECK(table_from_tree(linear_tree(3)) == Table{{3}, {}});
}

TEST_CASE("example tree and its vertex order") {
    PlanarTree t{{{0, 0}, {1}, {0, 0, 0}}};
    t.validate();
    CHECK(table_from_tree(t) == Table{{1, 3, 3, 3}, {0, 2, 2}});
    std::vector<std::string> names;
    for (Vertex v : vertex_order(t)) names.push_back(vertex_name(v));
    CHECK(names == std::vector<std::string>{"x1^0", "x2^1", "x1^2", "x3^3", "x2^3", "x1^3", "x1^1"});
    CHECK(render_ascii(t).find("level 3: x1^3->x1^2") != std::string::npos);
    CHECK(render_dot(t).find("digraph") != std::string::npos);
}

TEST_CASE("vertex order is a total order") {
    for (const auto& t : trees_up_to(7)) {
        auto vs = t.vertices();
        for (Vertex x : vs) {
            CHECK_FALSE(precedes(t, x, x));
            for (Vertex y : vs) {
                if (x == y) continue;
                CHECK(precedes(t, x, y) != precedes(t, y, x));
                for (Vertex z : vs)
                    if (precedes(t, x, y) && precedes(t, y, z)) CHECK(precedes(t, x, z));
            }
        }
    }
}

TEST_CASE("vertex order is the right-to-left preorder") {
    for (const auto& t : trees_up_to(9)) CHECK(vertex_order(t) == reverse_preorder(t));
}

TEST_CASE("path order matches vertex order") {
    for (const auto& t : trees_up_to(7)) {
        auto vs = t.vertices();
        for (Vertex x : vs)
            for (Vertex y : vs) CHECK(precedes(t, x, y) == precedes_paths(t.path(x), t.path(y)));
    }
}

TEST_CASE("suspension") {
    PlanarTree t = tree_from_table({{2, 2, 1, 2}, {1, 0, 0}});
    CHECK(table_from_tree(suspend_tree(t)) == Table{{3, 3, 2, 3}, {2, 1, 1}});
    for (const auto& a : trees_up_to(7)) {
        PlanarTree s = suspend_tree(a);
        CHECK(s.vertex_count() == a.vertex_count() + 1);
        CHECK(table_from_tree(s) == shift_table(table_from_tree(a)));
        CHECK(root_decompose(s).size() == 1);
        CHECK(root_decompose(s)[0] == a);
    }
}

TEST_CASE("root decomposition is a wedge of suspensions") {
    CHECK_THROWS_AS(root_decompose(point_tree()), DomainError);
    for (const auto& a : trees_up_to(8)) {
        if (a.height() == 0) continue;
        Table want;
        for (const auto& f : root_decompose(a)) {
            Table s = shift_table(table_from_tree(f));
            if (!want.tops.empty()) want.glues.push_back(0);
            want.tops.insert(want.tops.end(), s.tops.begin(), s.tops.end());
            want.glues.insert(want.glues.end(), s.glues.begin(), s.glues.end());
        }
        CHECK(want == table_from_tree(a));
    }
}

TEST_CASE("cuts reconstruct the table") {
    for (const auto& a : trees_up_to(7)) {
        CHECK(reconstruct(decompose_at_vertices(a, {{0, 0}})) == table_from_tree(a));
        CHECK(reconstruct(decompose_at_vertices(a, leaves(a))) == table_from_tree(a));
        if (a.height() >= 1) {
            std::vector<Vertex> level1;
            for (std::size_t i = 0; i < a.level_size(1); ++i) level1.push_back({1, i});
            CHECK(reconstruct(decompose_at_vertices(a, level1)) == table_from_tree(a));
        }
    }
    PlanarTree t = tree_from_table({{2, 1}, {0}});
    CHECK_THROWS_AS(decompose_at_vertices(t, {{1, 0}}), ValidationError);
    CHECK_THROWS_AS(decompose_at_vertices(t, {{0, 0}, {1, 0}}), ValidationError);
}

TEST_CASE("truncation and boundary") {
    for (const auto& a : trees_up_to(8)) {
        for (int k = 1; k <= a.height(); ++k) {
            PlanarTree b = boundary_tree(a, k);
            CHECK(b == truncate(a, a.height() - k));
            Table t = table_from_tree(a);
            for (int i = 0; i < k; ++i) t = boundary_table(t);
            CHECK(table_from_tree(b) == t);
        }
    }
    CHECK_THROWS_AS(truncate(point_tree(), -1), DomainError);
}

TEST_CASE("leaf insertion and removal") {
    for (const auto& a : trees_up_to(6))
        for (Vertex v : a.vertices())
            for (std::size_t slot = 0; slot <= a.child_count(v); ++slot) {
                Insertion ins = insert_leaf(a, v, slot);
                ins.tree.validate();
                CHECK(ins.tree.vertex_count() == a.vertex_count() + 1);
                CHECK(ins.tree.is_leaf(ins.added));
                CHECK(ins.tree.parent(ins.added) == shift_vertex(ins, v));
                CHECK(remove_leaf(ins.tree, ins.added) == a);
            }
}

TEST_CASE("lowest common ancestors give the glue levels") {
    for (const auto& a : trees_up_to(7)) {
        auto ls = leaves(a);
        Table t = table_from_tree(a);
        for (std::size_t i = 0; i + 1 < ls.size(); ++i)
            CHECK(lowest_common_ancestor(a, ls[i], ls[i + 1]).height == t.glues[i]);
    }
}

TEST_CASE("json output") {
    PlanarTree t = tree_from_table({{2, 1}, {0}});
    auto j = to_json(t);
    CHECK(j.contains("parents"));
}
