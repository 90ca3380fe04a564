#include "varmax/families.hpp"

#include <cctype>
#include <stdexcept>

#include "varmax/construction.hpp"
#include "varmax/graph6.hpp"

namespace varmax {

Graph named_graph(const std::string& family, int param) {
  if (family == "K") {
    if (param < 1) throw std::invalid_argument("K_n requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < param; ++j)
      for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
    return Graph(param, std::move(edges));
  }
  if (family == "S") {
    if (param < 1) throw std::invalid_argument("S_n requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < param; ++v) edges.emplace_back(0, v);
    return Graph(param, std::move(edges));
  }
  if (family == "C") {
    if (param < 3) throw std::invalid_argument("C_n requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < param; ++v) edges.emplace_back(v, (v + 1) % param);
    return Graph(param, std::move(edges));
  }
  if (family == "P") {
    if (param < 1) throw std::invalid_argument("P_n requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < param; ++v) edges.emplace_back(v, v + 1);
    return Graph(param, std::move(edges));
  }
  if (family == "paw") return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}});
  if (family == "diamond") return Graph(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  throw std::invalid_argument("unknown graph family: " + family);
}

Graph parse_graph_spec(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty graph spec");
  if (spec == "paw" || spec == "diamond") return named_graph(spec);
  if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3));
  if (spec.rfind("construction:", 0) == 0) {
    int k = -1, m = -1;
    std::string rest = spec.substr(13);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto eq = rest.find('=', pos);
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      if (eq == std::string::npos || eq > comma)
        throw std::invalid_argument("bad construction spec: " + spec);
      const std::string key = rest.substr(pos, eq - pos);
      const int value = std::stoi(rest.substr(eq + 1, comma - eq - 1));
      if (key == "k")
        k = value;
      else if (key == "m")
        m = value;
      else
        throw std::invalid_argument("bad construction key: " + key);
      pos = comma + 1;
    }
    if (k < 0 || m < 0)
      throw std::invalid_argument("construction spec needs k= and m=");
    return build_tree({k, m}).graph;
  }
  const char head = spec[0];
  if ((head == 'K' || head == 'S' || head == 'C' || head == 'P') && spec.size() > 1) {
    for (std::size_t i = 1; i < spec.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(spec[i])))
        throw std::invalid_argument("bad graph spec: " + spec);
    return named_graph(std::string(1, head), std::stoi(spec.substr(1)));
  }
  throw std::invalid_argument("unrecognized graph spec: " + spec);
}

}  // namespace varmax
