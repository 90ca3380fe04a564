#include "varmax/graph6.hpp"

#include <stdexcept>

namespace varmax {

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  const int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
  if (n < 1 || n > 62)
    throw std::invalid_argument("graph6: size byte out of range (n must be 1..62)");
  const int nbits = n * (n - 1) / 2;
  const int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + nbytes)
    throw std::invalid_argument("graph6: truncated or overlong bit field");
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const unsigned char c = static_cast<unsigned char>(text[1 + bit / 6]);
      if (c < 63 || c > 126)
        throw std::invalid_argument("graph6: character out of range");
      const int group = c - 63;
      if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Remaining pad bits must be zero, otherwise emit(parse(s)) != s.
  for (; bit < nbytes * 6; ++bit) {
    const unsigned char c = static_cast<unsigned char>(text[1 + bit / 6]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: character out of range");
    if (((c - 63) >> (5 - bit % 6)) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6: order exceeds 62");
  const int nbits = n * (n - 1) / 2;
  const int nbytes = (nbits + 5) / 6;
  std::string out(1 + nbytes, static_cast<char>(63));
  out[0] = static_cast<char>(63 + n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    }
  }
  return out;
}

}  // namespace varmax
