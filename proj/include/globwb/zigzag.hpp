#pragma once

#include <functional>
#include <vector>

#include "globwb/globset.hpp"

namespace globwb {

// Positions (0,k) are tops, (1,k) bottoms. left[k]: (0,k) -> (1,k); right[k]: (0,k+1) -> (1,k).
template <class Object, class Arrow>
struct ZigZag {
    std::vector<Object> tops;
    std::vector<Object> bottoms;
    std::vector<Arrow> left, right;

    std::size_t length() const { return bottoms.size(); }
    bool shape_ok() const {
        return tops.size() == bottoms.size() + 1 && left.size() == bottoms.size() && right.size() == bottoms.size();
    }
    bool operator==(const ZigZag&) const = default;
};

using SetZigZag = ZigZag<FiniteGlobularSet, GlobularSetMap>;

template <class Object, class Arrow>
ZigZag<Object, Arrow> unit_zigzag(const Object& a) {
    return {{a}, {}, {}, {}};
}

// F then G: F's last top must equal G's first top.
template <class Object, class Arrow>
ZigZag<Object, Arrow> concat(const ZigZag<Object, Arrow>& f, const ZigZag<Object, Arrow>& g) {
    if (!f.shape_ok() || !g.shape_ok()) throw StructuralError("concat: malformed zig-zag");
    if (!(f.tops.back() == g.tops.front())) throw StructuralError("concat: endpoint mismatch");
    ZigZag<Object, Arrow> h = f;
    h.tops.insert(h.tops.end(), g.tops.begin() + 1, g.tops.end());
    h.bottoms.insert(h.bottoms.end(), g.bottoms.begin(), g.bottoms.end());
    h.left.insert(h.left.end(), g.left.begin(), g.left.end());
    h.right.insert(h.right.end(), g.right.begin(), g.right.end());
    return h;
}

// Sub-zig-zag over bottoms [first, first+len).
template <class Object, class Arrow>
ZigZag<Object, Arrow> slice(const ZigZag<Object, Arrow>& f, std::size_t first, std::size_t len) {
    ZigZag<Object, Arrow> s;
    s.tops.assign(f.tops.begin() + first, f.tops.begin() + first + len + 1);
    s.bottoms.assign(f.bottoms.begin() + first, f.bottoms.begin() + first + len);
    s.left.assign(f.left.begin() + first, f.left.begin() + first + len);
    s.right.assign(f.right.begin() + first, f.right.begin() + first + len);
    return s;
}

void validate(const SetZigZag& f);
Diagram to_diagram(const SetZigZag& f);  // objects: tops, then bottoms
Cocone colimit_zigzag(const SetZigZag& f);
SetZigZag chunk(const SetZigZag& f, const std::vector<std::size_t>& partition);

// The glueing diagram of a table as a zig-zag, padded with empty tops at both ends.
SetZigZag glueing_zigzag(const Table& t);

nlohmann::json to_json(const SetZigZag& f);
SetZigZag zigzag_from_json(const nlohmann::json& j);

}  // namespace globwb
