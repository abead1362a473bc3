#include "globwb/generators.hpp"

#include <algorithm>
#include <numeric>

namespace globwb {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

FiniteGlobularSet random_set(Rng& rng, std::size_t max_cells, int max_dim) {
    FiniteGlobularSet x;
    std::size_t budget = pick(rng, 1, std::max<std::size_t>(1, max_cells));
    std::size_t c0 = pick(rng, 1, std::min<std::size_t>(budget, 4));
    x.counts.push_back(c0);
    budget -= c0;
    for (int k = 1; k <= max_dim && budget > 0; ++k) {
        std::size_t ck = pick(rng, 0, std::min<std::size_t>(budget, 4));
        if (ck == 0) break;
        std::vector<Cell> s, t;
        for (std::size_t i = 0; i < ck; ++i) {
            Cell a = static_cast<Cell>(pick(rng, 0, x.counts[k - 1] - 1));
            std::vector<Cell> cands;
            for (Cell b = 0; b < x.counts[k - 1]; ++b)
                if (x.parallel(k - 1, a, b)) cands.push_back(b);
            s.push_back(a);
            t.push_back(cands[pick(rng, 0, cands.size() - 1)]);
        }
        x.counts.push_back(ck);
        x.src.push_back(std::move(s));
        x.tgt.push_back(std::move(t));
        budget -= ck;
    }
    x.validate();
    return x;
}

GlobularSetMap random_inclusion(Rng& rng, const FiniteGlobularSet& y) {
    std::vector<std::vector<char>> keep;
    for (std::size_t c : y.counts) keep.emplace_back(c, 0);
    for (int k = y.dim(); k >= 0; --k)
        for (Cell c = 0; c < y.count(k); ++c) {
            if (!keep[k][c] && pick(rng, 0, 1)) keep[k][c] = 1;
            if (keep[k][c] && k > 0) {
                keep[k - 1][y.s(k, c)] = 1;
                keep[k - 1][y.t(k, c)] = 1;
            }
        }
    FiniteGlobularSet x;
    std::vector<std::vector<Cell>> comp, index;
    for (int k = 0; k <= y.dim(); ++k) {
        std::vector<Cell> incl, idx(y.count(k), 0);
        for (Cell c = 0; c < y.count(k); ++c)
            if (keep[k][c]) {
                idx[c] = static_cast<Cell>(incl.size());
                incl.push_back(c);
            }
        if (incl.empty()) break;
        x.counts.push_back(incl.size());
        if (k > 0) {
            std::vector<Cell> s, t;
            for (Cell c : incl) {
                s.push_back(index[k - 1][y.s(k, c)]);
                t.push_back(index[k - 1][y.t(k, c)]);
            }
            x.src.push_back(std::move(s));
            x.tgt.push_back(std::move(t));
        }
        comp.push_back(std::move(incl));
        index.push_back(std::move(idx));
    }
    GlobularSetMap f{x, y, comp};
    f.validate();
    return f;
}

GlobularSetMap random_quotient(Rng& rng, const FiniteGlobularSet& x, std::size_t merges) {
    Diagram d;
    d.objects.push_back(x);
    for (std::size_t i = 0; i < merges && x.dim() >= 0; ++i) {
        int k = static_cast<int>(pick(rng, 0, x.dim()));
        Cell a = static_cast<Cell>(pick(rng, 0, x.count(k) - 1));
        Cell b = static_cast<Cell>(pick(rng, 0, x.count(k) - 1));
        d.objects.push_back(disk(k));
        std::size_t o = d.objects.size() - 1;
        d.edges.push_back({o, 0, disk_map(x, k, a)});
        d.edges.push_back({o, 0, disk_map(x, k, b)});
    }
    return colimit(d).legs[0];
}

GlobularSetMap random_map(Rng& rng, std::size_t max_cells, int max_dim) {
    FiniteGlobularSet y = random_set(rng, max_cells, max_dim);
    GlobularSetMap i = random_inclusion(rng, y);
    GlobularSetMap q = random_quotient(rng, y, pick(rng, 0, 2));
    return compose(q, i);
}

GlobularSetMap random_relabel(Rng& rng, const FiniteGlobularSet& x) {
    std::vector<std::vector<Cell>> perm;
    for (std::size_t c : x.counts) {
        std::vector<Cell> p(c);
        std::iota(p.begin(), p.end(), Cell{0});
        std::shuffle(p.begin(), p.end(), rng);
        perm.push_back(std::move(p));
    }
    FiniteGlobularSet y = x;
    for (int k = 1; k <= x.dim(); ++k)
        for (Cell c = 0; c < x.count(k); ++c) {
            y.src[k - 1][perm[k][c]] = perm[k - 1][x.s(k, c)];
            y.tgt[k - 1][perm[k][c]] = perm[k - 1][x.t(k, c)];
        }
    GlobularSetMap f{x, y, perm};
    f.validate();
    return f;
}

Table random_table(Rng& rng, std::size_t max_entries, int max_dim) {
    for (;;) {
        Table t;
        std::size_t m = pick(rng, 1, max_entries);
        for (std::size_t k = 0; k < m; ++k) t.tops.push_back(static_cast<int>(pick(rng, 0, max_dim)));
        bool ok = true;
        for (std::size_t k = 0; k + 1 < m && ok; ++k) {
            int lim = std::min(t.tops[k], t.tops[k + 1]);
            if (lim == 0)
                ok = false;
            else
                t.glues.push_back(static_cast<int>(pick(rng, 0, lim - 1)));
        }
        if (ok) return t;
    }
}

SetZigZag random_zigzag(Rng& rng, std::size_t length, std::size_t top_cells, int max_dim) {
    SetZigZag z;
    for (std::size_t k = 0; k <= length; ++k) z.tops.push_back(random_set(rng, top_cells, max_dim));
    for (std::size_t k = 0; k < length; ++k) {
        Diagram d;
        d.objects = {z.tops[k], z.tops[k + 1]};
        if (pick(rng, 0, 1)) d.objects.push_back(random_set(rng, 3, max_dim));
        Cocone sum = colimit(d);
        GlobularSetMap q = random_quotient(rng, sum.apex, pick(rng, 0, 3));
        z.bottoms.push_back(q.codomain);
        z.left.push_back(compose(q, sum.legs[0]));
        z.right.push_back(compose(q, sum.legs[1]));
    }
    validate(z);
    return z;
}

std::vector<std::size_t> random_partition(Rng& rng, std::size_t n) {
    std::vector<std::size_t> parts;
    std::size_t cur = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ++cur;
        if (i + 1 == n || pick(rng, 0, 1)) {
            parts.push_back(cur);
            cur = 0;
        }
    }
    return parts;
}

}  // namespace globwb
