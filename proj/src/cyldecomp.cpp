#include "globwb/cyldecomp.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace globwb {

namespace {

constexpr Cell kUnset = std::numeric_limits<Cell>::max();

// Root path of the new vertex in the amalgamated tree: existing sibling j sits at 2j+1,
// a new vertex inserted at slot p sits at 2p.
std::vector<std::size_t> amalgamated_path(const PlanarTree& a, const ExtensionSite& s) {
    std::vector<std::size_t> p = a.path(s.parent);
    for (auto& x : p) x = 2 * x + 1;
    p.push_back(2 * s.slot);
    return p;
}

std::map<Vertex, std::size_t> leaf_ordinals(const PlanarTree& t) {
    std::map<Vertex, std::size_t> m;
    auto ls = leaves(t);
    for (std::size_t i = 0; i < ls.size(); ++i) m[ls[i]] = i;
    return m;
}

std::map<std::pair<Vertex, std::size_t>, std::size_t> site_index(const std::vector<ExtensionSite>& ls) {
    std::map<std::pair<Vertex, std::size_t>, std::size_t> m;
    for (std::size_t i = 0; i < ls.size(); ++i) m[{ls[i].parent, ls[i].slot}] = i;
    return m;
}

Cell leaf_cell(const Realization& r, std::size_t leaf, std::optional<Eps> face) {
    Cell top = r.top(leaf);
    if (!face) return top;
    int n = r.inclusions[leaf].domain.dim();
    return *face == Eps::Sigma ? r.set.s(n, top) : r.set.t(n, top);
}

SumMapLabel concrete_label(const PlanarTree& a, const ExtensionSite& site, Eps face) {
    SumMapLabel l;
    const int n = a.height();
    l.kind = site.height == n + 1 ? LabelKind::BoundaryFace : LabelKind::TreeInclusion;
    if (l.kind == LabelKind::BoundaryFace) l.eps = face;
    Insertion ins{site.tree, site.added};
    auto bl = leaf_ordinals(site.tree);
    auto al = leaves(a);
    l.domain_leaves = al.size();
    l.codomain_leaves = bl.size();
    Table ta = table_from_tree(a), tb = table_from_tree(site.tree);
    const Realization &ra = realize_table(ta), &rb = realize_table(tb);
    std::vector<Cell> cells;
    for (Vertex v : al) {
        LeafImage im = v == site.parent ? LeafImage{bl.at(site.added), face} : LeafImage{bl.at(shift_vertex(ins, v)), {}};
        cells.push_back(leaf_cell(rb, im.leaf, im.face));
        l.images.push_back(im);
    }
    l.map = map_from_sum(ra, ta, rb.set, cells);
    return l;
}

SumMapLabel whisker_label(const PlanarTree& a, const ExtensionSite& site, Side side) {
    SumMapLabel l;
    l.kind = LabelKind::Whiskering;
    l.side = side;
    l.level = site.height;
    std::size_t first = a.children(site.parent).first;
    l.pivot = {site.height, side == Side::Right ? first + site.slot - 1 : first + site.slot};
    l.piece = subtree(a, l.pivot);
    auto al = leaves(a);
    l.domain_leaves = al.size();
    l.codomain_leaves = leaves(site.tree).size();
    for (std::size_t i = 0; i < al.size(); ++i)
        if (al[i].height >= l.level && a.ancestor(al[i], l.level) == l.pivot) l.whiskered.push_back(i);
    return l;
}

const char* face_text(Eps e) { return e == Eps::Sigma ? "σ" : "τ"; }

}  // namespace

bool site_before(const PlanarTree& a, const ExtensionSite& x, const ExtensionSite& y) {
    return precedes_paths(amalgamated_path(a, x), amalgamated_path(a, y));
}

namespace {

std::vector<ExtensionSite> enumerate_uncached(const PlanarTree& a) {
    std::vector<std::pair<std::vector<std::size_t>, ExtensionSite>> keyed;
    for (Vertex v : a.vertices())
        for (std::size_t slot = 0; slot <= a.child_count(v); ++slot) {
            Insertion ins = insert_leaf(a, v, slot);
            ExtensionSite s{a, v, slot, std::move(ins.tree), ins.added, v.height + 1};
            auto key = amalgamated_path(a, s);
            keyed.emplace_back(std::move(key), std::move(s));
        }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return precedes_paths(x.first, y.first); });
    std::vector<ExtensionSite> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.second));
    return out;
}

}  // namespace

const std::vector<ExtensionSite>& enumerate_L(const PlanarTree& a) {
    static std::mutex mu;
    static std::map<std::vector<std::vector<std::size_t>>, std::vector<ExtensionSite>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(a.parents);
    if (it == cache.end()) it = cache.emplace(a.parents, enumerate_uncached(a)).first;
    return it->second;
}

std::string SumMapLabel::kind_name() const {
    switch (kind) {
        case LabelKind::TreeInclusion: return "tree-inclusion";
        case LabelKind::BoundaryFace: return "boundary-face";
        case LabelKind::Whiskering: return "whiskering";
    }
    return "";
}

std::string SumMapLabel::render() const {
    const std::string cup = "⊔";
    std::string out;
    if (kind == LabelKind::Whiskering) {
        bool prev_w = false;
        for (std::size_t i = 0; i < domain_leaves; ++i) {
            bool w = std::find(whiskered.begin(), whiskered.end(), i) != whiskered.end();
            if (w && prev_w) continue;
            if (!out.empty()) out += cup;
            out += w ? "w" : "1";
            prev_w = w;
        }
        return out;
    }
    bool aligned = images.size() == codomain_leaves;
    for (std::size_t i = 0; i < images.size() && aligned; ++i) aligned = images[i].leaf == i;
    if (aligned) {
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (i) out += cup;
            out += images[i].face ? face_text(*images[i].face) : "1";
        }
        return out;
    }
    out = "(";
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i) out += ",";
        out += "i" + std::to_string(images[i].leaf);
        if (images[i].face) out += face_text(*images[i].face);
    }
    return out + ")";
}

EdgeMaps edge_maps(const PlanarTree& a, const ExtensionSite& site) {
    if (!(site.base == a)) throw ValidationError("edge_maps: site is not an extension of the given tree");
    if (!(remove_leaf(site.tree, site.added) == a)) throw ValidationError("edge_maps: inconsistent site");
    EdgeMaps e;
    e.z = site.least() ? concrete_label(a, site, Eps::Tau) : whisker_label(a, site, Side::Right);
    e.v = site.greatest() ? concrete_label(a, site, Eps::Sigma) : whisker_label(a, site, Side::Left);
    return e;
}

LabeledZigZag cyl_diagram(const PlanarTree& a) {
    LabeledZigZag z;
    z.sites = enumerate_L(a);
    Table ta = table_from_tree(a);
    z.diagram.tops.assign(z.sites.size() + 1, ta);
    for (const auto& s : z.sites) {
        EdgeMaps e = edge_maps(a, s);
        z.diagram.bottoms.push_back(s.table());
        z.diagram.left.push_back(std::move(e.v));
        z.diagram.right.push_back(std::move(e.z));
    }
    return z;
}

std::string render_dot(const LabeledZigZag& z, const std::string& name) {
    auto style = [](const SumMapLabel& l) -> std::string {
        switch (l.kind) {
            case LabelKind::TreeInclusion: return "color=blue";
            case LabelKind::BoundaryFace: return "color=darkgreen";
            case LabelKind::Whiskering: return "color=red, style=dashed";
        }
        return "";
    };
    const auto& d = z.diagram;
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
    os << "  { rank=same;";
    for (std::size_t k = 0; k < d.tops.size(); ++k) os << " t" << k << ';';
    os << " }\n  { rank=same;";
    for (std::size_t k = 0; k < d.bottoms.size(); ++k) os << " b" << k << ';';
    os << " }\n";
    for (std::size_t k = 0; k < d.tops.size(); ++k)
        os << "  t" << k << " [label=\"" << to_string(d.tops[k]) << "\"];\n";
    for (std::size_t k = 0; k < d.bottoms.size(); ++k)
        os << "  b" << k << " [label=\"" << to_string(d.bottoms[k]) << "\"];\n";
    for (std::size_t k = 0; k < d.bottoms.size(); ++k) {
        os << "  t" << k << " -> b" << k << " [label=\"v: " << d.left[k].render() << "\", " << style(d.left[k]) << "];\n";
        os << "  t" << k + 1 << " -> b" << k << " [label=\"z: " << d.right[k].render() << "\", " << style(d.right[k])
           << "];\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

nlohmann::json label_json(const SumMapLabel& l) {
    nlohmann::json j{{"kind", l.kind_name()}, {"label", l.render()}};
    if (l.eps) j["eps"] = eps_name(*l.eps);
    if (l.map) j["components"] = l.map->comp;
    if (l.kind == LabelKind::Whiskering) {
        j["side"] = l.side == Side::Left ? "left" : "right";
        j["level"] = l.level;
        j["pivot"] = vertex_name(l.pivot);
        j["subtree"] = to_json(table_from_tree(l.piece));
    }
    return j;
}

}  // namespace

nlohmann::json to_json(const LabeledZigZag& z) {
    const auto& d = z.diagram;
    nlohmann::json j{{"tops", nlohmann::json::array()}, {"bottoms", nlohmann::json::array()},
                     {"legs", nlohmann::json::array()}};
    for (const auto& t : d.tops) j["tops"].push_back(to_json(t));
    for (const auto& t : d.bottoms) j["bottoms"].push_back(to_json(t));
    for (std::size_t k = 0; k < d.bottoms.size(); ++k) {
        j["legs"].push_back({{"from", {0, k}}, {"to", {1, k}}, {"map", label_json(d.left[k])}});
        j["legs"].push_back({{"from", {0, k + 1}}, {"to", {1, k}}, {"map", label_json(d.right[k])}});
    }
    return j;
}

IntervalDecomposition interval_decomposition(const PlanarTree& a) {
    if (a.height() < 1) throw DomainError("interval decomposition needs dim(A) >= 1");
    const auto& sites = enumerate_L(a);
    IntervalDecomposition d;
    std::vector<std::size_t> run;
    auto flush = [&]() {
        if (run.empty()) return;
        d.partition.push_back(run.size());
        d.blocks.push_back(run);
        run.clear();
    };
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (sites[i].height == 1) {
            flush();
            d.root_attached.push_back(i);
            d.partition.push_back(1);
        } else {
            run.push_back(i);
        }
    }
    flush();
    const std::size_t q = a.level_size(1);
    for (std::size_t j = 0; j < d.blocks.size(); ++j) d.block_factor.push_back(q - 1 - j);
    return d;
}

bool interval_blocks_match(const PlanarTree& a, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    auto d = interval_decomposition(a);
    const auto& sites = enumerate_L(a);
    auto factors = root_decompose(a);
    if (d.blocks.size() != factors.size()) return fail("block count differs from the number of root factors");
    if (d.root_attached.size() != factors.size() + 1) return fail("root-attached count is not q+1");
    for (std::size_t j = 0; j < d.blocks.size(); ++j) {
        std::size_t f = d.block_factor[j];
        const auto& inner = enumerate_L(factors[f]);
        if (inner.size() != d.blocks[j].size()) return fail("block " + std::to_string(j) + " has the wrong size");
        for (std::size_t i = 0; i < inner.size(); ++i) {
            const auto& outer = sites[d.blocks[j][i]];
            auto parts = root_decompose(outer.tree);
            if (parts.size() != factors.size()) return fail("site leaves the root fiber unchanged in size");
            for (std::size_t r = 0; r < parts.size(); ++r) {
                const PlanarTree& want = r == f ? inner[i].tree : factors[r];
                if (!(parts[r] == want))
                    return fail("block " + std::to_string(j) + " position " + std::to_string(i) +
                                " does not match the suspended enumeration of its factor");
            }
            if (outer.slot != inner[i].slot || outer.height != inner[i].height + 1)
                return fail("slot or height mismatch inside block " + std::to_string(j));
        }
    }
    return true;
}

namespace {

std::vector<std::size_t> phi_uncached(const PlanarTree& a, int k, Eps e) {
    const int n = a.height();
    if (k < 1 || k > n) throw DomainError("phi: need 1 <= k <= dim(A)");
    const int top = n - k;
    const auto& ld = enumerate_L(boundary_tree(a, k));
    auto idx = site_index(enumerate_L(a));
    std::vector<std::size_t> out;
    for (const auto& s : ld) {
        std::size_t slot = s.slot;
        if (s.height == top + 1) slot = e == Eps::Sigma ? 0 : a.child_count(s.parent);
        out.push_back(idx.at({s.parent, slot}));
    }
    return out;
}

}  // namespace

std::vector<std::size_t> phi(const PlanarTree& a, int k, Eps e) {
    static std::mutex mu;
    static std::map<std::tuple<std::vector<std::vector<std::size_t>>, int, Eps>, std::vector<std::size_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(a.parents, k, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, phi_uncached(a, k, e)).first;
    return it->second;
}

std::vector<std::optional<std::size_t>> restrict_keep_chop(const PlanarTree& a, int k, Eps e) {
    const int n = a.height();
    if (k < 1 || k > n) throw DomainError("restrict: need 1 <= k <= dim(A)");
    const int top = n - k;
    const auto& la = enumerate_L(a);
    const auto& ld = enumerate_L(boundary_tree(a, k));
    std::vector<std::optional<std::size_t>> out(la.size());
    for (std::size_t i = 0; i < la.size(); ++i) {
        const auto& s = la[i];
        const int h = s.parent.height;
        if (h > top) continue;
        if (h == top) {
            // Only the far-left (sigma) or far-right (tau) new edge of the corolla survives.
            std::size_t fiber = s.tree.child_count(s.parent);
            bool edge = e == Eps::Sigma ? s.slot == 0 : s.slot + 1 == fiber;
            if (!edge) continue;
        }
        PlanarTree chopped = truncate(s.tree, top);
        Vertex added = s.added;
        if (s.height == top + 1) {
            chopped.parents.push_back({s.parent.index});
            added = {top + 1, 0};
        }
        for (std::size_t j = 0; j < ld.size(); ++j)
            if (ld[j].added == added && ld[j].tree == chopped) {
                out[i] = j;
                break;
            }
    }
    return out;
}

GlobularSetMap iterated_boundary(const PlanarTree& a, int k, Eps e) {
    if (k == 0) return identity_map(realize_table(table_from_tree(a)).set);
    return compose(boundary_inclusion(table_from_tree(a), e), iterated_boundary(truncate(a, a.height() - 1), k - 1, e));
}

namespace {

GlobularSetMap j_single(const PlanarTree& a, std::size_t b, Eps e) {
    const int n = a.height();
    const PlanarTree da = truncate(a, n - 1);
    const auto& ld = enumerate_L(da);
    const auto& site = ld.at(b);
    const auto& la = enumerate_L(a);
    const auto& target = la[phi(a, 1, e)[b]];
    const Table tb = site.table(), tt = target.table();
    if (site.height < n) {
        GlobularSetMap f = boundary_inclusion(tt, e);
        if (!(f.domain == realize_table(tb).set)) throw StructuralError("j: boundary of phi(B) is not B");
        return f;
    }
    // Top case: induced on the pushout B = dA u D_n by (z or v) after the face of dA, and the new disk.
    EdgeMaps em = edge_maps(a, target);
    const SumMapLabel& leg = e == Eps::Sigma ? em.z : em.v;
    if (!leg.concrete()) throw StructuralError("j: expected a concrete leg in the top case");
    GlobularSetMap outer = compose(*leg.map, boundary_inclusion(table_from_tree(a), e));
    const Realization& rd = realize_table(table_from_tree(da));
    const Realization& rb = realize_table(tb);
    const Realization& rt = realize_table(tt);
    auto dl = leaf_ordinals(da);
    auto tl = leaf_ordinals(target.tree);
    std::vector<Cell> cells;
    for (Vertex v : leaves(site.tree)) {
        if (v == site.added)
            cells.push_back(rt.top(tl.at(target.added)));
        else
            cells.push_back(outer(v.height, rd.top(dl.at(v))));
    }
    return map_from_sum(rb, tb, rt.set, cells);
}

}  // namespace

GlobularSetMap j_map(const PlanarTree& a, std::size_t b, Eps e, int k) {
    if (k < 1 || k > a.height()) throw DomainError("j_map: need 1 <= k <= dim(A)");
    if (k == 1) return j_single(a, b, e);
    PlanarTree da = truncate(a, a.height() - 1);
    GlobularSetMap inner = j_map(da, b, e, k - 1);
    std::size_t b2 = phi(da, k - 1, e)[b];
    return compose(j_single(a, b2, e), inner);
}

SquareReport check_compatibility_square(const PlanarTree& a, std::size_t b, Eps e, int k) {
    SquareReport rep;
    const int n = a.height();
    if (k < 1 || k > n) throw DomainError("compatibility square: need 1 <= k <= dim(A)");
    const int top = n - k;
    const PlanarTree dk = boundary_tree(a, k);
    const auto& ld = enumerate_L(dk);
    const auto& site = ld.at(b);
    const auto& la = enumerate_L(a);
    const auto& target = la[phi(a, k, e)[b]];
    EdgeMaps lm = edge_maps(dk, site), rm = edge_maps(a, target);
    const SumMapLabel& left = e == Eps::Sigma ? lm.z : lm.v;
    const SumMapLabel& right = e == Eps::Sigma ? rm.z : rm.v;
    GlobularSetMap up = iterated_boundary(a, k, e);
    GlobularSetMap j = j_map(a, b, e, k);

    if (left.concrete() != right.concrete()) {
        rep.mode = "mixed";
        rep.detail = "edge kinds disagree: " + left.kind_name() + " vs " + right.kind_name();
        return rep;
    }
    if (left.concrete()) {
        rep.mode = "concrete";
        GlobularSetMap lhs = compose(*right.map, up), rhs = compose(j, *left.map);
        rep.compared = lhs.domain.total();
        rep.passed = lhs == rhs;
        if (!rep.passed) rep.detail = "realized composites differ";
        return rep;
    }

    rep.mode = "symbolic";
    if (left.side != right.side || left.level != right.level || left.pivot != right.pivot) {
        rep.detail = "whiskering labels differ in side, level or pivot";
        return rep;
    }
    if (!(truncate(right.piece, top - right.level) == left.piece)) {
        rep.detail = "whiskered subtree does not truncate onto the boundary-side subtree";
        return rep;
    }
    // Outside the whiskered summands both legs are identities; compare the composites there.
    const Realization &ra = realize_table(table_from_tree(a)), &rt = realize_table(target.table());
    const Realization &rd = realize_table(table_from_tree(dk)), &rb = realize_table(site.table());
    auto al = leaves(a);
    auto tl = leaf_ordinals(target.tree);
    Insertion tins{target.tree, target.added};
    std::vector<std::vector<Cell>> partial;
    for (int d = 0; d <= ra.set.dim(); ++d) partial.emplace_back(ra.set.count(d), kUnset);
    for (std::size_t i = 0; i < al.size(); ++i) {
        if (std::find(right.whiskered.begin(), right.whiskered.end(), i) != right.whiskered.end()) continue;
        const auto& inc = ra.inclusions[i];
        const auto& out = rt.inclusions[tl.at(shift_vertex(tins, al[i]))];
        for (int d = 0; d <= inc.domain.dim(); ++d)
            for (Cell c = 0; c < inc.domain.count(d); ++c) partial[d][inc.comp[d][c]] = out.comp[d][c];
    }
    auto dl = leaves(dk);
    auto bl = leaf_ordinals(site.tree);
    Insertion bins{site.tree, site.added};
    for (std::size_t i = 0; i < dl.size(); ++i) {
        if (std::find(left.whiskered.begin(), left.whiskered.end(), i) != left.whiskered.end()) continue;
        const int d = dl[i].height;
        Cell lhs = partial[d][up(d, rd.top(i))];
        Cell rhs = j(d, rb.top(bl.at(shift_vertex(bins, dl[i]))));
        ++rep.compared;
        if (lhs == kUnset || lhs != rhs) {
            rep.detail = "composites differ on the unwhiskered summand " + std::to_string(i);
            return rep;
        }
    }
    rep.passed = true;
    return rep;
}

DegeneracyProfile degeneracy_profile(const PlanarTree& a, int n) {
    if (n < a.height()) throw ValidationError("degeneracy profile needs n >= dim(A)");
    DegeneracyProfile p{a.height(), n, {}};
    for (const auto& s : enumerate_L(a)) {
        ProfileEntry e;
        e.d = s.height;
        e.least = s.least();
        e.greatest = s.greatest();
        e.r = e.least ? e.d - 2 : e.d - 1;
        e.q = e.greatest ? e.d - 2 : e.d - 1;
        p.entries.push_back(e);
    }
    return p;
}

bool DegenerateCylinderShape::valid() const {
    return n >= 0 && p >= -1 && q >= -1 && std::abs(p - q) <= 1 && p <= n && q <= n;
}

std::vector<DegenerateCylinderShape> stack_shapes(const DegeneracyProfile& p) {
    std::vector<DegenerateCylinderShape> out;
    for (const auto& e : p.entries) out.push_back({p.n - 1, e.r, e.q});
    return out;
}

std::pair<int, int> vcomp_shape(const std::vector<std::pair<int, int>>& shapes) {
    if (shapes.empty()) throw ValidationError("vcomp_shape: empty list");
    std::pair<int, int> out = shapes.front();
    for (auto [p, q] : shapes) {
        if (p < -1 || q < -1 || std::abs(p - q) > 1) throw ValidationError("vcomp_shape: invalid shape pair");
        out.first = std::min(out.first, p);
        out.second = std::min(out.second, q);
    }
    return out;
}

namespace {

std::vector<std::size_t> surviving(const DegeneracyProfile& p, int n, bool source) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.entries.size(); ++i) {
        int c = source ? p.entries[i].r : p.entries[i].q;
        if (n > p.dim || c < n - 1) out.push_back(i);
    }
    return out;
}

}  // namespace

std::vector<std::size_t> source_restriction_indices(const DegeneracyProfile& p, int n) { return surviving(p, n, true); }
std::vector<std::size_t> target_restriction_indices(const DegeneracyProfile& p, int n) { return surviving(p, n, false); }

}  // namespace globwb
