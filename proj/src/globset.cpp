#include "globwb/globset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace globwb {

namespace {

constexpr Cell kUnset = std::numeric_limits<Cell>::max();

void trim(FiniteGlobularSet& x) {
    while (!x.counts.empty() && x.counts.back() == 0) {
        x.counts.pop_back();
        if (!x.src.empty()) {
            x.src.pop_back();
            x.tgt.pop_back();
        }
    }
}

std::string where(int k, Cell c) {
    return "cell " + std::to_string(c) + " of dimension " + std::to_string(k);
}

}  // namespace

const char* eps_name(Eps e) { return e == Eps::Sigma ? "sigma" : "tau"; }

std::size_t FiniteGlobularSet::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

Cell FiniteGlobularSet::face(int k, Cell x, int j, Eps e) const {
    for (; k > j; --k) x = e == Eps::Sigma ? s(k, x) : t(k, x);
    return x;
}

bool FiniteGlobularSet::parallel(int k, Cell a, Cell b) const {
    if (k == 0) return true;
    return s(k, a) == s(k, b) && t(k, a) == t(k, b);
}

void FiniteGlobularSet::validate() const {
    if (!counts.empty() && counts.back() == 0) throw StructuralError("trailing empty dimension");
    std::size_t want = counts.empty() ? 0 : counts.size() - 1;
    if (src.size() != want || tgt.size() != want)
        throw StructuralError("source/target tables do not match dimension count");
    for (std::size_t k = 0; k < want; ++k) {
        if (src[k].size() != counts[k + 1] || tgt[k].size() != counts[k + 1])
            throw StructuralError("source/target table size mismatch in dimension " + std::to_string(k + 1));
        for (std::size_t x = 0; x < counts[k + 1]; ++x)
            if (src[k][x] >= counts[k] || tgt[k][x] >= counts[k])
                throw StructuralError("face out of range for " + where(static_cast<int>(k + 1), static_cast<Cell>(x)));
    }
    for (int k = 2; k <= dim(); ++k) {
        for (Cell x = 0; x < counts[k]; ++x) {
            Cell a = s(k, x), b = t(k, x);
            if (s(k - 1, a) != s(k - 1, b) || t(k - 1, a) != t(k - 1, b))
                throw StructuralError("globularity fails at " + where(k, x));
        }
    }
}

void GlobularSetMap::validate() const {
    if (comp.size() != domain.counts.size()) throw StructuralError("map has wrong number of components");
    for (int k = 0; k <= domain.dim(); ++k) {
        if (comp[k].size() != domain.count(k)) throw StructuralError("component size mismatch");
        for (Cell x = 0; x < domain.count(k); ++x) {
            Cell y = comp[k][x];
            if (y >= codomain.count(k)) throw StructuralError("image out of range at " + where(k, x));
            if (k > 0 && (codomain.s(k, y) != comp[k - 1][domain.s(k, x)] ||
                          codomain.t(k, y) != comp[k - 1][domain.t(k, x)]))
                throw StructuralError("map does not commute with faces at " + where(k, x));
        }
    }
}

GlobularSetMap identity_map(const FiniteGlobularSet& x) {
    GlobularSetMap f{x, x, {}};
    for (std::size_t c : x.counts) {
        std::vector<Cell> v(c);
        std::iota(v.begin(), v.end(), Cell{0});
        f.comp.push_back(std::move(v));
    }
    return f;
}

GlobularSetMap compose(const GlobularSetMap& g, const GlobularSetMap& f) {
    if (!(f.codomain == g.domain)) throw StructuralError("compose: codomain/domain mismatch");
    GlobularSetMap h{f.domain, g.codomain, f.comp};
    for (std::size_t k = 0; k < h.comp.size(); ++k)
        for (Cell& c : h.comp[k]) c = g.comp[k][c];
    return h;
}

bool is_injective(const GlobularSetMap& f) {
    for (int k = 0; k <= f.domain.dim(); ++k) {
        std::vector<char> seen(f.codomain.count(k), 0);
        for (Cell y : f.comp[k]) {
            if (seen[y]) return false;
            seen[y] = 1;
        }
    }
    return true;
}

bool is_isomorphism(const GlobularSetMap& f) {
    return f.domain.counts == f.codomain.counts && is_injective(f);
}

FiniteGlobularSet empty_set() { return {}; }

FiniteGlobularSet disk(int n) {
    if (n < 0) throw ValidationError("disk dimension must be non-negative");
    FiniteGlobularSet d;
    d.counts.assign(n, 2);
    d.counts.push_back(1);
    for (int k = 1; k <= n; ++k) {
        std::size_t c = k < n ? 2 : 1;
        d.src.emplace_back(c, 0);
        d.tgt.emplace_back(c, 1);
    }
    return d;
}

GlobularSetMap disk_map(const FiniteGlobularSet& y_set, int n, Cell y) {
    if (y >= y_set.count(n)) throw StructuralError("disk_map: no such " + where(n, y));
    GlobularSetMap f{disk(n), y_set, {}};
    for (int j = 0; j < n; ++j)
        f.comp.push_back({y_set.face(n, y, j, Eps::Sigma), y_set.face(n, y, j, Eps::Tau)});
    f.comp.push_back({y});
    return f;
}

GlobularSetMap disk_face(int k, int n, Eps e) {
    if (k > n) throw ValidationError("disk_face: k > n");
    Cell c = k < n && e == Eps::Tau ? 1 : 0;
    return disk_map(disk(n), k, c);
}

FiniteGlobularSet sphere(int n) {
    FiniteGlobularSet s = disk(n);
    s.counts.pop_back();
    if (!s.src.empty()) {
        s.src.pop_back();
        s.tgt.pop_back();
    }
    return s;
}

GlobularSetMap sphere_inclusion(int n) {
    GlobularSetMap f = identity_map(sphere(n));
    f.codomain = disk(n);
    return f;
}

Cocone colimit(const Diagram& d) {
    const std::size_t nobj = d.objects.size();
    for (const auto& e : d.edges) {
        if (e.from >= nobj || e.to >= nobj) throw StructuralError("colimit: edge endpoint out of range");
        if (!(e.map.domain == d.objects[e.from]) || !(e.map.codomain == d.objects[e.to]))
            throw StructuralError("colimit: edge map endpoints do not match diagram objects");
        e.map.validate();
    }
    int top = -1;
    for (const auto& o : d.objects) top = std::max(top, o.dim());

    // offsets[i][k]: position of object i's k-cells in the disjoint union
    std::vector<std::vector<std::size_t>> offsets(nobj, std::vector<std::size_t>(top + 1, 0));
    std::vector<std::size_t> sizes(top + 1, 0);
    for (std::size_t i = 0; i < nobj; ++i)
        for (int k = 0; k <= top; ++k) {
            offsets[i][k] = sizes[k];
            sizes[k] += d.objects[i].count(k);
        }

    std::vector<std::vector<std::size_t>> parent(top + 1);
    for (int k = 0; k <= top; ++k) {
        parent[k].resize(sizes[k]);
        std::iota(parent[k].begin(), parent[k].end(), std::size_t{0});
    }
    auto find = [&](int k, std::size_t a) {
        auto& p = parent[k];
        while (p[a] != a) a = p[a] = p[p[a]];
        return a;
    };
    for (const auto& e : d.edges)
        for (int k = 0; k <= e.map.domain.dim(); ++k)
            for (Cell x = 0; x < e.map.domain.count(k); ++x) {
                std::size_t a = find(k, offsets[e.from][k] + x);
                std::size_t b = find(k, offsets[e.to][k] + e.map.comp[k][x]);
                if (a != b) parent[k][std::max(a, b)] = std::min(a, b);
            }

    // Renumber classes by first appearance in the disjoint union.
    std::vector<std::vector<Cell>> ids(top + 1);
    Cocone out;
    out.apex.counts.assign(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        ids[k].assign(sizes[k], kUnset);
        for (std::size_t a = 0; a < sizes[k]; ++a) {
            std::size_t r = find(k, a);
            if (ids[k][r] == kUnset) ids[k][r] = static_cast<Cell>(out.apex.counts[k]++);
        }
    }
    for (int k = 1; k <= top; ++k) {
        out.apex.src.emplace_back(out.apex.counts[k], kUnset);
        out.apex.tgt.emplace_back(out.apex.counts[k], kUnset);
    }
    for (std::size_t i = 0; i < nobj; ++i) {
        const auto& o = d.objects[i];
        for (int k = 1; k <= o.dim(); ++k)
            for (Cell x = 0; x < o.count(k); ++x) {
                Cell c = ids[k][find(k, offsets[i][k] + x)];
                Cell sc = ids[k - 1][find(k - 1, offsets[i][k - 1] + o.s(k, x))];
                Cell tc = ids[k - 1][find(k - 1, offsets[i][k - 1] + o.t(k, x))];
                Cell& ss = out.apex.src[k - 1][c];
                Cell& tt = out.apex.tgt[k - 1][c];
                if ((ss != kUnset && ss != sc) || (tt != kUnset && tt != tc))
                    throw StructuralError("colimit: faces not well defined on the quotient");
                ss = sc;
                tt = tc;
            }
    }
    trim(out.apex);
    out.apex.validate();
    for (std::size_t i = 0; i < nobj; ++i) {
        GlobularSetMap leg{d.objects[i], out.apex, {}};
        for (int k = 0; k <= d.objects[i].dim(); ++k) {
            std::vector<Cell> v(d.objects[i].count(k));
            for (Cell x = 0; x < v.size(); ++x) v[x] = ids[k][find(k, offsets[i][k] + x)];
            leg.comp.push_back(std::move(v));
        }
        out.legs.push_back(std::move(leg));
    }
    return out;
}

int Table::dim() const { return tops.empty() ? -1 : *std::max_element(tops.begin(), tops.end()); }

bool Table::valid() const {
    if (tops.empty() || glues.size() + 1 != tops.size()) return false;
    for (int i : tops)
        if (i < 0) return false;
    for (std::size_t k = 0; k < glues.size(); ++k)
        if (glues[k] < 0 || glues[k] >= tops[k] || glues[k] >= tops[k + 1]) return false;
    return true;
}

void Table::validate() const {
    if (tops.empty()) throw ValidationError("table needs at least one entry");
    if (glues.size() + 1 != tops.size()) throw ValidationError("table needs exactly one glue between consecutive entries");
    for (int i : tops)
        if (i < 0) throw ValidationError("negative table entry");
    for (std::size_t k = 0; k < glues.size(); ++k)
        if (glues[k] < 0 || glues[k] >= tops[k] || glues[k] >= tops[k + 1])
            throw ValidationError("glue level " + std::to_string(glues[k]) + " at position " + std::to_string(k + 1) +
                                  " is not below both neighbours");
}

Table shift_table(const Table& t, int by) {
    Table s = t;
    for (int& i : s.tops) i += by;
    for (int& i : s.glues) i += by;
    return s;
}

std::string to_string(const Table& t) {
    std::string s = "[";
    for (std::size_t k = 0; k < t.tops.size(); ++k) s += (k ? " " : "") + std::to_string(t.tops[k]);
    s += " /";
    for (int g : t.glues) s += " " + std::to_string(g);
    return s + "]";
}

Cell Realization::top(std::size_t k) const {
    const auto& inc = inclusions.at(k);
    return inc.comp[inc.domain.dim()][0];
}

namespace {

Realization realize_uncached(const Table& t) {
    t.validate();
    const std::size_t m = t.size();
    Diagram d;
    for (int i : t.tops) d.objects.push_back(disk(i));
    for (int g : t.glues) d.objects.push_back(disk(g));
    // The glue disk sits as target face of the left summand and source face of the right one.
    for (std::size_t k = 0; k + 1 < m; ++k) {
        d.edges.push_back({m + k, k, disk_face(t.glues[k], t.tops[k], Eps::Tau)});
        d.edges.push_back({m + k, k + 1, disk_face(t.glues[k], t.tops[k + 1], Eps::Sigma)});
    }
    Cocone c = colimit(d);
    Realization r{std::move(c.apex), {}};
    for (std::size_t k = 0; k < m; ++k) r.inclusions.push_back(std::move(c.legs[k]));
    return r;
}

}  // namespace

const Realization& realize_table(const Table& t) {
    static std::mutex mu;
    static std::map<Table, Realization> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, realize_uncached(t)).first;
    return it->second;
}

GlobularSetMap map_from_sum(const Realization& r, const Table& t, const FiniteGlobularSet& target,
                            const std::vector<Cell>& top_images) {
    if (top_images.size() != t.size()) throw StructuralError("map_from_sum: one image per summand required");
    GlobularSetMap f{r.set, target, {}};
    for (int k = 0; k <= r.set.dim(); ++k) f.comp.emplace_back(r.set.count(k), kUnset);
    for (std::size_t k = 0; k < t.size(); ++k) {
        GlobularSetMap dm = disk_map(target, t.tops[k], top_images[k]);
        const auto& inc = r.inclusions[k];
        for (int j = 0; j <= inc.domain.dim(); ++j)
            for (Cell c = 0; c < inc.domain.count(j); ++c) {
                Cell& slot = f.comp[j][inc.comp[j][c]];
                Cell v = dm.comp[j][c];
                if (slot != kUnset && slot != v)
                    throw StructuralError("map_from_sum: summand images disagree on a shared cell");
                slot = v;
            }
    }
    for (const auto& v : f.comp)
        for (Cell c : v)
            if (c == kUnset) throw StructuralError("map_from_sum: cell not covered by any summand");
    f.validate();
    return f;
}

FiniteGlobularSet suspend(const FiniteGlobularSet& x) {
    FiniteGlobularSet s;
    s.counts.push_back(2);
    for (std::size_t c : x.counts) s.counts.push_back(c);
    if (!x.counts.empty()) {
        s.src.emplace_back(x.counts[0], 0);
        s.tgt.emplace_back(x.counts[0], 1);
    }
    for (std::size_t k = 0; k < x.src.size(); ++k) {
        s.src.push_back(x.src[k]);
        s.tgt.push_back(x.tgt[k]);
    }
    return s;
}

GlobularSetMap suspend_map(const GlobularSetMap& f) {
    GlobularSetMap g{suspend(f.domain), suspend(f.codomain), {}};
    g.comp.push_back({0, 1});
    for (const auto& v : f.comp) g.comp.push_back(v);
    return g;
}

std::vector<std::vector<std::size_t>> boundary_groups(const Table& t) {
    t.validate();
    const int n = t.dim();
    if (n <= 0) throw DomainError("boundary of a 0-dimensional globular sum is undefined");
    std::vector<std::vector<std::size_t>> groups{{0}};
    for (std::size_t k = 1; k < t.size(); ++k) {
        bool merge = t.tops[k - 1] == n && t.tops[k] == n && t.glues[k - 1] == n - 1;
        if (merge)
            groups.back().push_back(k);
        else
            groups.push_back({k});
    }
    return groups;
}

Table boundary_table(const Table& t) {
    const int n = t.dim();
    auto groups = boundary_groups(t);
    Table b;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::size_t first = groups[g].front();
        b.tops.push_back(std::min(t.tops[first], n - 1));
        if (g > 0) b.glues.push_back(t.glues[first - 1]);
    }
    return b;
}

namespace {

GlobularSetMap boundary_inclusion_uncached(const Table& t, Eps e) {
    const int n = t.dim();
    auto groups = boundary_groups(t);
    Table bt = boundary_table(t);
    const Realization &dom = realize_table(bt), &cod = realize_table(t);
    std::vector<Cell> images;
    for (const auto& g : groups) {
        if (t.tops[g.front()] < n) {
            images.push_back(cod.top(g.front()));
        } else if (e == Eps::Sigma) {
            images.push_back(cod.set.s(n, cod.top(g.front())));
        } else {
            images.push_back(cod.set.t(n, cod.top(g.back())));
        }
    }
    return map_from_sum(dom, bt, cod.set, images);
}

}  // namespace

GlobularSetMap boundary_inclusion(const Table& t, Eps e) {
    static std::mutex mu;
    static std::map<std::pair<Table, Eps>, GlobularSetMap> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(t, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, boundary_inclusion_uncached(t, e)).first;
    return it->second;
}

MapClass classify_map(const GlobularSetMap& f, int n) {
    const auto& x = f.domain;
    const auto& y = f.codomain;
    MapClass out{true, true};
    for (int k = 0; k <= n; ++k) {
        if (x.count(k) != y.count(k)) {
            out.bijective = false;
            break;
        }
        if (k >= static_cast<int>(f.comp.size())) continue;
        std::vector<char> seen(y.count(k), 0);
        for (Cell c : f.comp[k]) {
            if (seen[c]) out.bijective = false;
            seen[c] = 1;
        }
    }
    const int top = std::max(x.dim(), y.dim());
    for (int i = std::max(n, 0); i < top && out.fully_faithful; ++i) {
        // X_{i+1} -> { (y, a, b) : a, b parallel in X_i, f a = s y, f b = t y } must be bijective.
        std::set<std::tuple<Cell, Cell, Cell>> have;
        for (Cell c = 0; c < x.count(i + 1); ++c)
            if (!have.insert({f.comp[i + 1][c], x.s(i + 1, c), x.t(i + 1, c)}).second) out.fully_faithful = false;
        std::vector<std::vector<Cell>> pre(y.count(i));
        for (Cell a = 0; a < x.count(i); ++a) pre[f.comp[i][a]].push_back(a);
        std::size_t triples = 0;
        for (Cell yc = 0; yc < y.count(i + 1) && out.fully_faithful; ++yc)
            for (Cell a : pre[y.s(i + 1, yc)])
                for (Cell b : pre[y.t(i + 1, yc)])
                    if (x.parallel(i, a, b)) {
                        ++triples;
                        if (!have.count({yc, a, b})) out.fully_faithful = false;
                    }
        if (out.fully_faithful && triples != have.size()) out.fully_faithful = false;
    }
    return out;
}

Factorization factorize(const GlobularSetMap& f, int n) {
    if (n < 0) throw ValidationError("factorize: n must be non-negative");
    const auto& x = f.domain;
    const auto& y = f.codomain;
    FiniteGlobularSet m;
    std::vector<std::vector<Cell>> hc, gc;
    const int low = std::min(n, x.dim());
    for (int k = 0; k <= low; ++k) {
        m.counts.push_back(x.count(k));
        if (k > 0) {
            m.src.push_back(x.src[k - 1]);
            m.tgt.push_back(x.tgt[k - 1]);
        }
        std::vector<Cell> id(x.count(k));
        std::iota(id.begin(), id.end(), Cell{0});
        hc.push_back(std::move(id));
        gc.push_back(f.comp[k]);
    }
    if (low == n) {
        for (int i = n; i < y.dim(); ++i) {
            std::map<std::tuple<Cell, Cell, Cell>, Cell> index;
            std::vector<Cell> s, t, g;
            std::vector<std::vector<Cell>> pre(y.count(i));
            for (Cell a = 0; a < m.counts[i]; ++a) pre[gc[i][a]].push_back(a);
            for (Cell yc = 0; yc < y.count(i + 1); ++yc)
                for (Cell a : pre[y.s(i + 1, yc)])
                    for (Cell b : pre[y.t(i + 1, yc)])
                        if (m.parallel(i, a, b)) {
                            index[{yc, a, b}] = static_cast<Cell>(g.size());
                            s.push_back(a);
                            t.push_back(b);
                            g.push_back(yc);
                        }
            if (g.empty()) break;
            std::vector<Cell> h(x.count(i + 1));
            for (Cell c = 0; c < h.size(); ++c)
                h[c] = index.at({f.comp[i + 1][c], hc[i][x.s(i + 1, c)], hc[i][x.t(i + 1, c)]});
            m.counts.push_back(g.size());
            m.src.push_back(std::move(s));
            m.tgt.push_back(std::move(t));
            hc.push_back(std::move(h));
            gc.push_back(std::move(g));
        }
    }
    trim(m);
    hc.resize(x.counts.size());
    gc.resize(m.counts.size());
    Factorization out{{x, m, std::move(hc)}, {m, y, std::move(gc)}};
    out.h.validate();
    out.g.validate();
    return out;
}

namespace {

struct IsoSearch {
    const FiniteGlobularSet& x;
    const FiniteGlobularSet& y;
    std::vector<std::vector<Cell>> fwd, bwd;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sx, sy;
    std::vector<std::pair<int, Cell>> trail;

    static std::vector<std::vector<std::pair<std::size_t, std::size_t>>> signature(const FiniteGlobularSet& z) {
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> sig(z.counts.size());
        for (int k = 0; k <= z.dim(); ++k) sig[k].assign(z.count(k), {0, 0});
        for (int k = 1; k <= z.dim(); ++k)
            for (Cell c = 0; c < z.count(k); ++c) {
                ++sig[k - 1][z.s(k, c)].first;
                ++sig[k - 1][z.t(k, c)].second;
            }
        return sig;
    }

    IsoSearch(const FiniteGlobularSet& a, const FiniteGlobularSet& b) : x(a), y(b) {
        for (std::size_t c : x.counts) {
            fwd.emplace_back(c, kUnset);
            bwd.emplace_back(c, kUnset);
        }
        sx = signature(x);
        sy = signature(y);
    }

    bool assign(int k, Cell a, Cell b) {
        if (fwd[k][a] != kUnset) return fwd[k][a] == b;
        if (bwd[k][b] != kUnset || sx[k][a] != sy[k][b]) return false;
        fwd[k][a] = b;
        bwd[k][b] = a;
        trail.push_back({k, a});
        if (k == 0) return true;
        return assign(k - 1, x.s(k, a), y.s(k, b)) && assign(k - 1, x.t(k, a), y.t(k, b));
    }

    void undo(std::size_t mark) {
        while (trail.size() > mark) {
            auto [k, a] = trail.back();
            trail.pop_back();
            bwd[k][fwd[k][a]] = kUnset;
            fwd[k][a] = kUnset;
        }
    }

    bool search() {
        for (int k = x.dim(); k >= 0; --k)
            for (Cell a = 0; a < x.count(k); ++a) {
                if (fwd[k][a] != kUnset) continue;
                for (Cell b = 0; b < y.count(k); ++b) {
                    if (bwd[k][b] != kUnset) continue;
                    std::size_t mark = trail.size();
                    if (assign(k, a, b) && search()) return true;
                    undo(mark);
                }
                return false;
            }
        return true;
    }
};

}  // namespace

std::optional<GlobularSetMap> find_isomorphism(const FiniteGlobularSet& x, const FiniteGlobularSet& y) {
    if (x.counts != y.counts) return std::nullopt;
    IsoSearch s(x, y);
    if (!s.search()) return std::nullopt;
    GlobularSetMap f{x, y, s.fwd};
    f.validate();
    return f;
}

nlohmann::json to_json(const FiniteGlobularSet& x) {
    nlohmann::json j;
    j["dims"] = nlohmann::json::array();
    for (std::size_t c : x.counts) {
        std::vector<Cell> ids(c);
        std::iota(ids.begin(), ids.end(), Cell{0});
        j["dims"].push_back(ids);
    }
    j["src"] = x.src;
    j["tgt"] = x.tgt;
    return j;
}

FiniteGlobularSet set_from_json(const nlohmann::json& j) {
    FiniteGlobularSet x;
    std::vector<std::map<long long, Cell>> index;
    for (const auto& dimj : j.at("dims")) {
        std::map<long long, Cell> idx;
        for (const auto& id : dimj) {
            long long v = id.get<long long>();
            if (!idx.emplace(v, static_cast<Cell>(idx.size())).second)
                throw StructuralError("duplicate cell identifier " + std::to_string(v));
        }
        x.counts.push_back(idx.size());
        index.push_back(std::move(idx));
    }
    const auto& sj = j.contains("src") ? j.at("src") : nlohmann::json::array();
    const auto& tj = j.contains("tgt") ? j.at("tgt") : nlohmann::json::array();
    if (sj.size() + 1 != x.counts.size() && !(x.counts.empty() && sj.empty()))
        throw StructuralError("src must list every dimension above 0");
    if (tj.size() != sj.size()) throw StructuralError("src and tgt lists differ in length");
    for (std::size_t k = 0; k < sj.size(); ++k) {
        std::vector<Cell> s, t;
        for (const auto& v : sj[k]) {
            auto it = index[k].find(v.get<long long>());
            if (it == index[k].end()) throw StructuralError("unknown source identifier");
            s.push_back(it->second);
        }
        for (const auto& v : tj[k]) {
            auto it = index[k].find(v.get<long long>());
            if (it == index[k].end()) throw StructuralError("unknown target identifier");
            t.push_back(it->second);
        }
        x.src.push_back(std::move(s));
        x.tgt.push_back(std::move(t));
    }
    x.validate();
    return x;
}

nlohmann::json to_json(const GlobularSetMap& f) {
    return {{"domain", to_json(f.domain)}, {"codomain", to_json(f.codomain)}, {"components", f.comp}};
}

GlobularSetMap map_from_json(const nlohmann::json& j) {
    GlobularSetMap f{set_from_json(j.at("domain")), set_from_json(j.at("codomain")),
                     j.at("components").get<std::vector<std::vector<Cell>>>()};
    f.validate();
    return f;
}

nlohmann::json to_json(const Table& t) { return {{"tops", t.tops}, {"glues", t.glues}}; }

}  // namespace globwb
