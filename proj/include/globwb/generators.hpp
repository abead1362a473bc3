#pragma once

#include <random>

#include "globwb/globset.hpp"
#include "globwb/zigzag.hpp"

namespace globwb {

using Rng = std::mt19937_64;

// Random globular set with at most max_cells cells and dimension at most max_dim.
FiniteGlobularSet random_set(Rng& rng, std::size_t max_cells, int max_dim);
// A sub-globular-set inclusion into y (faces closed).
GlobularSetMap random_inclusion(Rng& rng, const FiniteGlobularSet& y);
// Quotient of x identifying `merges` random pairs of same-dimension cells.
GlobularSetMap random_quotient(Rng& rng, const FiniteGlobularSet& x, std::size_t merges);
// Random map: inclusion followed by a quotient, total cells bounded.
GlobularSetMap random_map(Rng& rng, std::size_t max_cells, int max_dim);
// Same set with cells renumbered by random permutations, and the renumbering map.
GlobularSetMap random_relabel(Rng& rng, const FiniteGlobularSet& x);

Table random_table(Rng& rng, std::size_t max_entries, int max_dim);

// Zig-zag whose bottoms glue neighbouring tops along random identifications.
SetZigZag random_zigzag(Rng& rng, std::size_t length, std::size_t top_cells, int max_dim);
std::vector<std::size_t> random_partition(Rng& rng, std::size_t n);

}  // namespace globwb
