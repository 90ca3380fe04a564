#pragma once

#include <string>
#include <vector>

#include "varmax/graph.hpp"

namespace varmax {

inline constexpr int kCanonicalOrderLimit = 8;

// Canonical label: graph6 string of the lexicographically least adjacency
// encoding over all relabelings that sort degrees in non-increasing order.
// Equal strings iff isomorphic; exhaustive search, so n <= 8.
std::string canonical_form(const Graph& g);

// Full automorphism group as explicit vertex permutations, identity first.
std::vector<std::vector<int>> automorphisms(const Graph& g);

// Orbits of the automorphism group acting on vertices; each orbit sorted,
// orbits ordered by smallest member.
std::vector<std::vector<int>> vertex_orbits(const Graph& g);

// One representative per isomorphism class of connected graphs on n
// vertices, 1 <= n <= 7, ordered by edge count then canonical form.
std::vector<Graph> enumerate_connected(int n);

}  // namespace varmax
