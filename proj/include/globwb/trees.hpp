#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "globwb/globset.hpp"

namespace globwb {

struct Vertex {
    int height = 0;
    std::size_t index = 0;
    auto operator<=>(const Vertex&) const = default;
};

// Level 0 is the root. parents[k-1][i] is the parent (in level k-1) of vertex i of level k.
// Each level is stored left to right and parent maps are monotone.
struct PlanarTree {
    std::vector<std::vector<std::size_t>> parents;

    int height() const { return static_cast<int>(parents.size()); }
    std::size_t level_size(int k) const { return k == 0 ? 1 : parents[k - 1].size(); }
    std::size_t vertex_count() const;
    Vertex parent(Vertex v) const { return {v.height - 1, parents[v.height - 1][v.index]}; }
    // Children of v occupy [first, last) in level height(v)+1.
    std::pair<std::size_t, std::size_t> children(Vertex v) const;
    std::size_t child_count(Vertex v) const;
    bool is_leaf(Vertex v) const { return child_count(v) == 0; }
    Vertex ancestor(Vertex v, int h) const;
    std::vector<Vertex> vertices() const;  // level by level
    // Sibling positions from the root down.
    std::vector<std::size_t> path(Vertex v) const;

    void validate() const;
    bool operator==(const PlanarTree&) const = default;
};

PlanarTree point_tree();
PlanarTree linear_tree(int n);

std::vector<Vertex> leaves(const PlanarTree& t);  // left to right
Vertex lowest_common_ancestor(const PlanarTree& t, Vertex a, Vertex b);

PlanarTree tree_from_table(const Table& t);
Table table_from_tree(const PlanarTree& t);

// x precedes y in the vertex order.
bool precedes(const PlanarTree& t, Vertex x, Vertex y);
// Same rule on root paths; within a level, paths compare lexicographically.
bool precedes_paths(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y);
std::vector<Vertex> vertex_order(const PlanarTree& t);

PlanarTree suspend_tree(const PlanarTree& t);
PlanarTree subtree(const PlanarTree& t, Vertex v);
std::vector<PlanarTree> root_decompose(const PlanarTree& t);

struct CutPiece {
    int level;  // m_i, the height of the cut vertex
    Vertex vertex;
    PlanarTree piece;  // C_i
};
struct Cut {
    std::vector<CutPiece> pieces;  // left to right
    std::vector<int> regions;      // h_i between consecutive pieces
};
Cut decompose_at_vertices(const PlanarTree& t, std::vector<Vertex> vs);
// Table of the glued expression  S^{m_1}C_1 u_{h_1} ... u S^{m_n}C_n.
Table reconstruct(const Cut& c);

PlanarTree truncate(const PlanarTree& t, int h);
PlanarTree boundary_tree(const PlanarTree& t, int k);

struct Insertion {
    PlanarTree tree;
    Vertex added;
};
// Adds a leaf above `parent` at position `slot` of its fiber (0 = leftmost).
Insertion insert_leaf(const PlanarTree& t, Vertex parent, std::size_t slot);
// Inverse of insert_leaf.
PlanarTree remove_leaf(const PlanarTree& t, Vertex leaf);
// Image of a base vertex inside insert_leaf's result.
Vertex shift_vertex(const Insertion& ins, Vertex v);

// All planar trees with exactly n vertices (n >= 1), from preorder depth sequences.
std::vector<PlanarTree> all_trees(std::size_t n);

std::string render_ascii(const PlanarTree& t);
std::string render_dot(const PlanarTree& t, const std::string& name = "tree");
std::string vertex_name(Vertex v);  // x_{index+1}^{height}
nlohmann::json to_json(const PlanarTree& t);

}  // namespace globwb
