#include "globwb/zigzag.hpp"

#include <numeric>

namespace globwb {

void validate(const SetZigZag& f) {
    if (!f.shape_ok()) throw StructuralError("zig-zag: inconsistent lengths");
    for (std::size_t k = 0; k < f.length(); ++k) {
        if (!(f.left[k].domain == f.tops[k]) || !(f.left[k].codomain == f.bottoms[k]))
            throw StructuralError("zig-zag: left leg " + std::to_string(k) + " has wrong endpoints");
        if (!(f.right[k].domain == f.tops[k + 1]) || !(f.right[k].codomain == f.bottoms[k]))
            throw StructuralError("zig-zag: right leg " + std::to_string(k) + " has wrong endpoints");
    }
}

Diagram to_diagram(const SetZigZag& f) {
    validate(f);
    Diagram d;
    const std::size_t nt = f.tops.size();
    d.objects = f.tops;
    d.objects.insert(d.objects.end(), f.bottoms.begin(), f.bottoms.end());
    for (std::size_t k = 0; k < f.length(); ++k) {
        d.edges.push_back({k, nt + k, f.left[k]});
        d.edges.push_back({k + 1, nt + k, f.right[k]});
    }
    return d;
}

Cocone colimit_zigzag(const SetZigZag& f) { return colimit(to_diagram(f)); }

SetZigZag chunk(const SetZigZag& f, const std::vector<std::size_t>& partition) {
    validate(f);
    if (std::accumulate(partition.begin(), partition.end(), std::size_t{0}) != f.length())
        throw ValidationError("chunk: partition does not sum to the zig-zag length");
    SetZigZag out{{f.tops.front()}, {}, {}, {}};
    std::size_t first = 0;
    for (std::size_t n : partition) {
        if (n == 0) throw ValidationError("chunk: parts must be positive");
        SetZigZag piece = slice(f, first, n);
        if (n == 1) {
            out = concat(out, piece);
        } else {
            Cocone c = colimit_zigzag(piece);
            SetZigZag reduced{{piece.tops.front(), piece.tops.back()}, {c.apex}, {c.legs.front()}, {c.legs[n]}};
            out = concat(out, reduced);
        }
        first += n;
    }
    return out;
}

SetZigZag glueing_zigzag(const Table& t) {
    t.validate();
    const std::size_t m = t.size();
    SetZigZag z;
    z.tops.push_back(empty_set());
    for (int g : t.glues) z.tops.push_back(disk(g));
    z.tops.push_back(empty_set());
    for (int i : t.tops) z.bottoms.push_back(disk(i));
    for (std::size_t k = 0; k < m; ++k) {
        if (k == 0)
            z.left.push_back({empty_set(), z.bottoms[0], {}});
        else
            z.left.push_back(disk_face(t.glues[k - 1], t.tops[k], Eps::Sigma));
        if (k + 1 == m)
            z.right.push_back({empty_set(), z.bottoms[k], {}});
        else
            z.right.push_back(disk_face(t.glues[k], t.tops[k], Eps::Tau));
    }
    return z;
}

nlohmann::json to_json(const SetZigZag& f) {
    nlohmann::json j;
    j["tops"] = nlohmann::json::array();
    j["bottoms"] = nlohmann::json::array();
    j["legs"] = nlohmann::json::array();
    for (const auto& o : f.tops) j["tops"].push_back(to_json(o));
    for (const auto& o : f.bottoms) j["bottoms"].push_back(to_json(o));
    for (std::size_t k = 0; k < f.length(); ++k) {
        j["legs"].push_back({{"from", {0, k}}, {"to", {1, k}}, {"map", f.left[k].comp}});
        j["legs"].push_back({{"from", {0, k + 1}}, {"to", {1, k}}, {"map", f.right[k].comp}});
    }
    return j;
}

SetZigZag zigzag_from_json(const nlohmann::json& j) {
    SetZigZag f;
    for (const auto& o : j.at("tops")) f.tops.push_back(set_from_json(o));
    for (const auto& o : j.at("bottoms")) f.bottoms.push_back(set_from_json(o));
    const std::size_t n = f.bottoms.size();
    std::vector<std::optional<GlobularSetMap>> left(n), right(n);
    for (const auto& leg : j.at("legs")) {
        auto from = leg.at("from").get<std::vector<std::size_t>>();
        auto to = leg.at("to").get<std::vector<std::size_t>>();
        if (from.size() != 2 || to.size() != 2 || from[0] != 0 || to[0] != 1 || to[1] >= n)
            throw StructuralError("zig-zag leg must go from a top (0,k) to a bottom (1,j)");
        auto comp = leg.at("map").get<std::vector<std::vector<Cell>>>();
        if (from[1] == to[1])
            left[to[1]] = GlobularSetMap{f.tops.at(from[1]), f.bottoms[to[1]], comp};
        else if (from[1] == to[1] + 1)
            right[to[1]] = GlobularSetMap{f.tops.at(from[1]), f.bottoms[to[1]], comp};
        else
            throw StructuralError("zig-zag leg joins non-adjacent positions");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (!left[k] || !right[k]) throw StructuralError("zig-zag: missing leg into bottom " + std::to_string(k));
        left[k]->validate();
        right[k]->validate();
        f.left.push_back(*left[k]);
        f.right.push_back(*right[k]);
    }
    validate(f);
    return f;
}

}  // namespace globwb
