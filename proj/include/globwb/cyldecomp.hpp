#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "globwb/globset.hpp"
#include "globwb/trees.hpp"
#include "globwb/zigzag.hpp"

namespace globwb {

struct ExtensionSite {
    PlanarTree base;
    Vertex parent;
    std::size_t slot = 0;  // position in the parent's fiber, 0 = leftmost
    PlanarTree tree;       // base plus one leaf
    Vertex added;
    int height = 0;  // height of the new vertex

    bool least() const { return slot == 0; }
    bool greatest() const { return slot == base.child_count(parent); }
    Table table() const { return table_from_tree(tree); }
};

// Sites ordered by comparing the two new vertices in the amalgamated tree.
const std::vector<ExtensionSite>& enumerate_L(const PlanarTree& a);
bool site_before(const PlanarTree& a, const ExtensionSite& x, const ExtensionSite& y);

enum class LabelKind { TreeInclusion, BoundaryFace, Whiskering };
enum class Side { Left, Right };  // Left: new cell before its successor (v); Right: after its predecessor (z)

struct LeafImage {
    std::size_t leaf;            // top summand of the codomain
    std::optional<Eps> face;     // none: the summand itself
};

struct SumMapLabel {
    LabelKind kind = LabelKind::TreeInclusion;
    std::optional<Eps> eps;                  // BoundaryFace
    std::optional<GlobularSetMap> map;       // concrete kinds
    std::vector<LeafImage> images;           // concrete kinds, one per top summand of A
    Side side = Side::Right;                 // Whiskering
    int level = 0;                           // Whiskering: suspension level m
    Vertex pivot;                            // Whiskering: the neighbour y
    PlanarTree piece;                        // Whiskering: subtree C above y
    std::vector<std::size_t> whiskered;      // Whiskering: summands of A above y
    std::size_t domain_leaves = 0;
    std::size_t codomain_leaves = 0;

    bool concrete() const { return kind != LabelKind::Whiskering; }
    std::string render() const;
    std::string kind_name() const;
};

struct EdgeMaps {
    SumMapLabel z, v;
};
EdgeMaps edge_maps(const PlanarTree& a, const ExtensionSite& site);

struct LabeledZigZag {
    ZigZag<Table, SumMapLabel> diagram;
    std::vector<ExtensionSite> sites;
};
LabeledZigZag cyl_diagram(const PlanarTree& a);
std::string render_dot(const LabeledZigZag& z, const std::string& name = "cyl");
nlohmann::json to_json(const LabeledZigZag& z);

struct IntervalDecomposition {
    std::vector<std::size_t> root_attached;          // positions of sites with new vertex at height 1
    std::vector<std::size_t> partition;              // part sizes: singletons and blocks, in order
    std::vector<std::vector<std::size_t>> blocks;    // runs between consecutive root-attached sites
    std::vector<std::size_t> block_factor;           // index into root_decompose(a) for each block
};
IntervalDecomposition interval_decomposition(const PlanarTree& a);
// Checks each block against the suspension of enumerate_L of its factor.
bool interval_blocks_match(const PlanarTree& a, std::string* why = nullptr);

// Positions of L(d^k A) sent into L(A).
std::vector<std::size_t> phi(const PlanarTree& a, int k, Eps e);
// Keep/discard/chop, computed by tree surgery; nullopt where discarded.
std::vector<std::optional<std::size_t>> restrict_keep_chop(const PlanarTree& a, int k, Eps e);

// Realized boundary inclusion d^k A -> A (composite of k single steps).
GlobularSetMap iterated_boundary(const PlanarTree& a, int k, Eps e);
// j map from site b of L(d^k A) into phi^k(b) of L(A).
GlobularSetMap j_map(const PlanarTree& a, std::size_t b, Eps e, int k);

struct SquareReport {
    bool passed = false;
    std::string mode;  // "concrete" or "symbolic"
    std::string detail;
    std::size_t compared = 0;
};
SquareReport check_compatibility_square(const PlanarTree& a, std::size_t b, Eps e, int k);

struct ProfileEntry {
    int r = 0, q = 0, d = 0;
    bool least = false, greatest = false;
};
struct DegeneracyProfile {
    int dim = 0;  // dim(A)
    int n = 0;
    std::vector<ProfileEntry> entries;
};
DegeneracyProfile degeneracy_profile(const PlanarTree& a, int n);

struct DegenerateCylinderShape {
    int n = 0, p = -1, q = -1;
    bool valid() const;
    bool uncollapsed() const { return valid() && std::max(p, q) < n; }
    bool source_collapsed() const { return p == n; }
    bool target_collapsed() const { return q == n; }
};
// Shapes of the stack of (n-1)-cylinders given by a profile.
std::vector<DegenerateCylinderShape> stack_shapes(const DegeneracyProfile& p);
std::pair<int, int> vcomp_shape(const std::vector<std::pair<int, int>>& shapes);

std::vector<std::size_t> source_restriction_indices(const DegeneracyProfile& p, int n);
std::vector<std::size_t> target_restriction_indices(const DegeneracyProfile& p, int n);

}  // namespace globwb
