#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "globwb/errors.hpp"

namespace globwb {

using Cell = std::uint32_t;

enum class Eps { Sigma, Tau };

const char* eps_name(Eps e);

// Cells of dimension k are 0..count(k)-1. src[k][x] is the source of the (k+1)-cell x.
// Trailing empty dimensions are never stored.
struct FiniteGlobularSet {
    std::vector<std::size_t> counts;
    std::vector<std::vector<Cell>> src, tgt;

    int dim() const { return static_cast<int>(counts.size()) - 1; }
    std::size_t count(int k) const {
        return k >= 0 && k < static_cast<int>(counts.size()) ? counts[k] : 0;
    }
    std::size_t total() const;
    Cell s(int k, Cell x) const { return src[k - 1][x]; }
    Cell t(int k, Cell x) const { return tgt[k - 1][x]; }
    // Iterated face: the j-dimensional source (or target) of the k-cell x.
    Cell face(int k, Cell x, int j, Eps e) const;
    bool parallel(int k, Cell a, Cell b) const;

    // Throws StructuralError on out-of-range incidences or failed globularity.
    void validate() const;

    bool operator==(const FiniteGlobularSet&) const = default;
};

struct GlobularSetMap {
    FiniteGlobularSet domain, codomain;
    std::vector<std::vector<Cell>> comp;

    Cell operator()(int k, Cell x) const { return comp[k][x]; }
    void validate() const;
    bool operator==(const GlobularSetMap&) const = default;
};

GlobularSetMap identity_map(const FiniteGlobularSet& x);
// g after f.
GlobularSetMap compose(const GlobularSetMap& g, const GlobularSetMap& f);
bool is_isomorphism(const GlobularSetMap& f);
bool is_injective(const GlobularSetMap& f);

FiniteGlobularSet empty_set();
FiniteGlobularSet disk(int n);
// Top cell of D_n is cell 0 in dimension n; below n, cell 0 is the source face, cell 1 the target face.
GlobularSetMap disk_face(int k, int n, Eps e);
// The map D_n -> Y classifying the n-cell y.
GlobularSetMap disk_map(const FiniteGlobularSet& y_set, int n, Cell y);

FiniteGlobularSet sphere(int n);  // S^{n-1}
GlobularSetMap sphere_inclusion(int n);

struct Diagram {
    struct Edge {
        std::size_t from, to;
        GlobularSetMap map;
    };
    std::vector<FiniteGlobularSet> objects;
    std::vector<Edge> edges;
};

struct Cocone {
    FiniteGlobularSet apex;
    std::vector<GlobularSetMap> legs;
};

Cocone colimit(const Diagram& d);

struct Table {
    std::vector<int> tops, glues;

    int dim() const;
    std::size_t size() const { return tops.size(); }
    bool valid() const;
    void validate() const;
    bool operator==(const Table&) const = default;
    auto operator<=>(const Table&) const = default;
};

Table shift_table(const Table& t, int by = 1);
// "[2 2 1 / 1 0]"
std::string to_string(const Table& t);

struct Realization {
    FiniteGlobularSet set;
    std::vector<GlobularSetMap> inclusions;
    Cell top(std::size_t k) const;
};

// Cached; the reference stays valid for the life of the process.
const Realization& realize_table(const Table& t);

// Map out of a realized globular sum, given the image of each top disk's top cell.
GlobularSetMap map_from_sum(const Realization& r, const Table& t, const FiniteGlobularSet& target,
                            const std::vector<Cell>& top_images);

FiniteGlobularSet suspend(const FiniteGlobularSet& x);
GlobularSetMap suspend_map(const GlobularSetMap& f);

// Lower top entries by one and merge summands glued along their own dimension.
Table boundary_table(const Table& t);
// For each summand of boundary_table(t), the summands of t it comes from.
std::vector<std::vector<std::size_t>> boundary_groups(const Table& t);
GlobularSetMap boundary_inclusion(const Table& t, Eps e);

struct MapClass {
    bool bijective;
    bool fully_faithful;
};
MapClass classify_map(const GlobularSetMap& f, int n);

struct Factorization {
    GlobularSetMap h, g;
};
Factorization factorize(const GlobularSetMap& f, int n);

std::optional<GlobularSetMap> find_isomorphism(const FiniteGlobularSet& x, const FiniteGlobularSet& y);
inline bool isomorphic(const FiniteGlobularSet& x, const FiniteGlobularSet& y) {
    return find_isomorphism(x, y).has_value();
}

nlohmann::json to_json(const FiniteGlobularSet& x);
FiniteGlobularSet set_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GlobularSetMap& f);
GlobularSetMap map_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Table& t);

}  // namespace globwb
