#pragma once

#include <string>

#include "varmax/graph.hpp"

namespace varmax {

// Families: K_n (complete), S_n (star, center = vertex 0), C_n (cycle in
// vertex order), P_n (path in vertex order), paw, diamond. The paw and
// diamond use the fixed labelings
//   paw:     edges {01,02,03,23}   (triangle 0-2-3, pendant 1 on 0)
//   diamond: edges {01,03,12,13,23} (degree-3 vertices 1 and 3)
Graph named_graph(const std::string& family, int param = 0);

// Parses the CLI graph syntax: "K4", "S5", "C6", "P10", "paw", "diamond",
// "construction:k=3,m=3", or "g6:<graph6>". Throws std::invalid_argument.
Graph parse_graph_spec(const std::string& spec);

}  // namespace varmax
