#include "globwb/trees.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace globwb {

std::size_t PlanarTree::vertex_count() const {
    std::size_t n = 1;
    for (const auto& l : parents) n += l.size();
    return n;
}

std::pair<std::size_t, std::size_t> PlanarTree::children(Vertex v) const {
    if (v.height >= height()) return {0, 0};
    const auto& p = parents[v.height];
    auto lo = std::lower_bound(p.begin(), p.end(), v.index);
    auto hi = std::upper_bound(lo, p.end(), v.index);
    return {static_cast<std::size_t>(lo - p.begin()), static_cast<std::size_t>(hi - p.begin())};
}

std::size_t PlanarTree::child_count(Vertex v) const {
    auto [a, b] = children(v);
    return b - a;
}

Vertex PlanarTree::ancestor(Vertex v, int h) const {
    while (v.height > h) v = parent(v);
    return v;
}

std::vector<Vertex> PlanarTree::vertices() const {
    std::vector<Vertex> out;
    for (int k = 0; k <= height(); ++k)
        for (std::size_t i = 0; i < level_size(k); ++i) out.push_back({k, i});
    return out;
}

std::vector<std::size_t> PlanarTree::path(Vertex v) const {
    std::vector<std::size_t> p(v.height);
    while (v.height > 0) {
        Vertex u = parent(v);
        p[v.height - 1] = v.index - children(u).first;
        v = u;
    }
    return p;
}

void PlanarTree::validate() const {
    for (int k = 1; k <= height(); ++k) {
        const auto& p = parents[k - 1];
        if (p.empty()) throw ValidationError("empty level " + std::to_string(k));
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] >= level_size(k - 1)) throw ValidationError("parent out of range");
            if (i > 0 && p[i] < p[i - 1]) throw ValidationError("parent map not monotone");
        }
    }
}

PlanarTree point_tree() { return {}; }

PlanarTree linear_tree(int n) {
    PlanarTree t;
    t.parents.assign(n, {0});
    return t;
}

std::vector<Vertex> leaves(const PlanarTree& t) {
    std::vector<Vertex> out;
    std::function<void(Vertex)> walk = [&](Vertex v) {
        auto [a, b] = t.children(v);
        if (a == b) out.push_back(v);
        for (std::size_t i = a; i < b; ++i) walk({v.height + 1, i});
    };
    walk({0, 0});
    return out;
}

Vertex lowest_common_ancestor(const PlanarTree& t, Vertex a, Vertex b) {
    int h = std::min(a.height, b.height);
    a = t.ancestor(a, h);
    b = t.ancestor(b, h);
    while (a != b) {
        a = t.parent(a);
        b = t.parent(b);
    }
    return a;
}

PlanarTree tree_from_table(const Table& tab) {
    tab.validate();
    PlanarTree t;
    std::vector<std::size_t> path{0};
    for (std::size_t k = 0; k < tab.size(); ++k) {
        int keep = k == 0 ? 0 : tab.glues[k - 1];
        path.resize(keep + 1);
        for (int h = keep + 1; h <= tab.tops[k]; ++h) {
            if (t.height() < h) t.parents.emplace_back();
            t.parents[h - 1].push_back(path[h - 1]);
            path.push_back(t.parents[h - 1].size() - 1);
        }
    }
    return t;
}

Table table_from_tree(const PlanarTree& t) {
    Table tab;
    auto ls = leaves(t);
    for (std::size_t k = 0; k < ls.size(); ++k) {
        tab.tops.push_back(ls[k].height);
        if (k > 0) tab.glues.push_back(lowest_common_ancestor(t, ls[k - 1], ls[k]).height);
    }
    return tab;
}

bool precedes(const PlanarTree& t, Vertex x, Vertex y) {
    if (x.height == y.height) return y.index < x.index;
    if (x.height < y.height) return t.ancestor(y, x.height).index <= x.index;
    return y.index < t.ancestor(x, y.height).index;
}

bool precedes_paths(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    auto lex_less = [](auto a0, auto a1, auto b0, auto b1) { return std::lexicographical_compare(a0, a1, b0, b1); };
    if (x.size() == y.size()) return lex_less(y.begin(), y.end(), x.begin(), x.end());
    if (x.size() < y.size()) return !lex_less(x.begin(), x.end(), y.begin(), y.begin() + x.size());
    return lex_less(y.begin(), y.end(), x.begin(), x.begin() + y.size());
}

std::vector<Vertex> vertex_order(const PlanarTree& t) {
    auto vs = t.vertices();
    std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return precedes(t, a, b); });
    return vs;
}

PlanarTree suspend_tree(const PlanarTree& t) {
    PlanarTree s;
    s.parents.push_back({0});
    for (const auto& l : t.parents) s.parents.push_back(l);
    return s;
}

PlanarTree subtree(const PlanarTree& t, Vertex v) {
    PlanarTree s;
    std::size_t lo = v.index, hi = v.index + 1;
    for (int h = v.height + 1; h <= t.height() && lo < hi; ++h) {
        const auto& p = t.parents[h - 1];
        std::size_t nlo = std::lower_bound(p.begin(), p.end(), lo) - p.begin();
        std::size_t nhi = std::lower_bound(p.begin(), p.end(), hi) - p.begin();
        if (nlo == nhi) break;
        std::vector<std::size_t> level;
        for (std::size_t i = nlo; i < nhi; ++i) level.push_back(p[i] - lo);
        s.parents.push_back(std::move(level));
        lo = nlo;
        hi = nhi;
    }
    return s;
}

std::vector<PlanarTree> root_decompose(const PlanarTree& t) {
    if (t.height() == 0) throw DomainError("root decomposition of the point is undefined");
    std::vector<PlanarTree> out;
    for (std::size_t i = 0; i < t.level_size(1); ++i) out.push_back(subtree(t, {1, i}));
    return out;
}

Cut decompose_at_vertices(const PlanarTree& t, std::vector<Vertex> vs) {
    for (Vertex v : vs)
        if (v.height > t.height() || v.index >= t.level_size(v.height)) throw ValidationError("invalid cut: no such vertex");
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = 0; b < vs.size(); ++b) {
            if (a == b) continue;
            if (vs[a].height <= vs[b].height && t.ancestor(vs[b], vs[a].height) == vs[a])
                throw ValidationError("invalid cut: subtrees above " + vertex_name(vs[a]) + " and " +
                                      vertex_name(vs[b]) + " overlap");
        }
    for (Vertex l : leaves(t)) {
        bool covered = std::any_of(vs.begin(), vs.end(), [&](Vertex v) {
            return v.height <= l.height && t.ancestor(l, v.height) == v;
        });
        if (!covered) throw ValidationError("invalid cut: leaf " + vertex_name(l) + " lies above no chosen vertex");
    }
    std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return t.path(a) < t.path(b); });
    Cut c;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        c.pieces.push_back({vs[i].height, vs[i], subtree(t, vs[i])});
        if (i > 0) c.regions.push_back(lowest_common_ancestor(t, vs[i - 1], vs[i]).height);
    }
    return c;
}

Table reconstruct(const Cut& c) {
    Table out;
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
        Table p = shift_table(table_from_tree(c.pieces[i].piece), c.pieces[i].level);
        if (i > 0) out.glues.push_back(c.regions[i - 1]);
        out.tops.insert(out.tops.end(), p.tops.begin(), p.tops.end());
        out.glues.insert(out.glues.end(), p.glues.begin(), p.glues.end());
    }
    return out;
}

PlanarTree truncate(const PlanarTree& t, int h) {
    if (h < 0) throw DomainError("truncation below the root");
    PlanarTree s = t;
    if (h < s.height()) s.parents.resize(h);
    return s;
}

PlanarTree boundary_tree(const PlanarTree& t, int k) {
    if (k < 0 || k > t.height()) throw DomainError("boundary_tree: k must lie in 0..height");
    return truncate(t, t.height() - k);
}

Insertion insert_leaf(const PlanarTree& t, Vertex parent, std::size_t slot) {
    if (parent.height > t.height() || parent.index >= t.level_size(parent.height))
        throw ValidationError("insert_leaf: no such vertex");
    if (slot > t.child_count(parent)) throw ValidationError("insert_leaf: slot out of range");
    Insertion ins{t, {parent.height + 1, 0}};
    int h = parent.height;
    if (h == t.height()) {
        ins.tree.parents.push_back({parent.index});
        return ins;
    }
    std::size_t pos = t.children(parent).first + slot;
    auto& level = ins.tree.parents[h];
    level.insert(level.begin() + static_cast<std::ptrdiff_t>(pos), parent.index);
    if (h + 1 < t.height())
        for (auto& p : ins.tree.parents[h + 1])
            if (p >= pos) ++p;
    ins.added.index = pos;
    return ins;
}

PlanarTree remove_leaf(const PlanarTree& t, Vertex leaf) {
    if (leaf.height == 0 || !t.is_leaf(leaf)) throw ValidationError("remove_leaf: not a non-root leaf");
    PlanarTree s = t;
    auto& level = s.parents[leaf.height - 1];
    level.erase(level.begin() + static_cast<std::ptrdiff_t>(leaf.index));
    if (leaf.height < t.height())
        for (auto& p : s.parents[leaf.height])
            if (p > leaf.index) --p;
    if (level.empty()) s.parents.pop_back();
    return s;
}

Vertex shift_vertex(const Insertion& ins, Vertex v) {
    if (v.height == ins.added.height && v.index >= ins.added.index) ++v.index;
    return v;
}

std::vector<PlanarTree> all_trees(std::size_t n) {
    std::vector<PlanarTree> out;
    if (n == 0) return out;
    std::vector<int> depth{0};
    std::function<void()> rec = [&]() {
        if (depth.size() == n) {
            PlanarTree t;
            std::vector<std::size_t> stack{0};
            for (std::size_t i = 1; i < depth.size(); ++i) {
                int d = depth[i];
                if (t.height() < d) t.parents.emplace_back();
                t.parents[d - 1].push_back(stack[d - 1]);
                stack.resize(d);
                stack.push_back(t.parents[d - 1].size() - 1);
            }
            out.push_back(std::move(t));
            return;
        }
        for (int d = 1; d <= depth.back() + 1; ++d) {
            depth.push_back(d);
            rec();
            depth.pop_back();
        }
    };
    rec();
    return out;
}

std::string vertex_name(Vertex v) { return "x" + std::to_string(v.index + 1) + "^" + std::to_string(v.height); }

std::string render_ascii(const PlanarTree& t) {
    std::ostringstream os;
    for (int k = 0; k <= t.height(); ++k) {
        os << "level " << k << ":";
        for (std::size_t i = 0; i < t.level_size(k); ++i) {
            os << ' ' << vertex_name({k, i});
            if (k > 0) os << "->" << vertex_name(t.parent({k, i}));
        }
        os << '\n';
    }
    return os.str();
}

std::string render_dot(const PlanarTree& t, const std::string& name) {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
    for (Vertex v : t.vertices())
        os << "  v" << v.height << '_' << v.index << " [label=\"" << vertex_name(v) << "\"];\n";
    for (int k = 1; k <= t.height(); ++k) {
        os << "  { rank=same;";
        for (std::size_t i = 0; i < t.level_size(k); ++i) os << " v" << k << '_' << i << ';';
        os << " }\n";
        for (std::size_t i = 0; i < t.level_size(k); ++i) {
            Vertex p = t.parent({k, i});
            os << "  v" << p.height << '_' << p.index << " -> v" << k << '_' << i << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

nlohmann::json to_json(const PlanarTree& t) {
    return {{"parents", t.parents}, {"table", to_json(table_from_tree(t))}};
}

}  // namespace globwb
