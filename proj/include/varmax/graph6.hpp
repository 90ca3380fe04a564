#pragma once

#include <string>

#include "varmax/graph.hpp"

namespace varmax {

// graph6 text codec, single-byte size variant (n <= 62). Bit order follows
// the published format: upper triangle by columns, packed big-endian into
// 6-bit groups offset by 63. Parsing enforces zero padding bits.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

}  // namespace varmax
