#include "varmax/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "varmax/graph6.hpp"

namespace varmax {
namespace {

// Upper-triangle adjacency bits in graph6 column order, packed so that the
// numeric order of the word equals the lexicographic order of the bits.
std::uint64_t encode_relabeled(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::uint64_t word = 0;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      word <<= 1;
      if (g.has_edge(perm[i], perm[j])) word |= 1;
    }
  }
  return word << (64 - bit);
}

// Vertices grouped by degree, highest degree first; a canonical relabeling
// must fill positions block by block, which is what keeps the search small.
std::vector<std::vector<int>> degree_blocks(const Graph& g) {
  std::map<int, std::vector<int>, std::greater<int>> by_degree;
  for (int v = 0; v < g.order(); ++v) by_degree[g.degree(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [deg, vs] : by_degree) blocks.push_back(vs);
  return blocks;
}

// Calls fn(perm) for every relabeling that sorts degrees non-increasingly.
// fn returns false to stop early.
template <typename Fn>
void for_each_sorted_relabeling(const Graph& g, Fn&& fn) {
  auto blocks = degree_blocks(g);
  std::vector<int> perm;
  perm.reserve(g.order());
  for (auto& b : blocks) std::sort(b.begin(), b.end());

  // Odometer over per-block permutations.
  std::vector<std::vector<int>> state = blocks;
  while (true) {
    perm.clear();
    for (const auto& b : state) perm.insert(perm.end(), b.begin(), b.end());
    if (!fn(perm)) return;
    int k = static_cast<int>(state.size()) - 1;
    while (k >= 0 && !std::next_permutation(state[k].begin(), state[k].end()))
      --k;
    if (k < 0) return;
  }
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) edges.emplace_back(inv[u], inv[v]);
  return Graph(g.order(), std::move(edges));
}

struct MaskGraph {
  int n;
  std::vector<std::uint32_t> adj;

  bool connected() const {
    std::uint32_t reached = 1, prev = 0;
    while (reached != prev) {
      prev = reached;
      std::uint32_t next = reached;
      for (int v = 0; v < n; ++v)
        if (reached & (1u << v)) next |= adj[v];
      reached = next;
    }
    return reached == (1u << n) - 1;
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() > kCanonicalOrderLimit)
    throw std::invalid_argument("canonical_form: order exceeds limit");
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_perm;
  for_each_sorted_relabeling(g, [&](const std::vector<int>& perm) {
    const std::uint64_t word = encode_relabeled(g, perm);
    if (word < best) {
      best = word;
      best_perm = perm;
    }
    return true;
  });
  return emit_graph6(relabel(g, best_perm));
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalOrderLimit)
    throw std::invalid_argument("automorphisms: order exceeds limit");
  std::vector<std::vector<int>> result;
  // A degree-respecting bijection: permute within degree classes only.
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[g.degree(v)].push_back(v);
  std::vector<std::vector<int>> state;
  std::vector<std::vector<int>> base;
  for (auto& [deg, vs] : classes) {
    base.push_back(vs);
    state.push_back(vs);
  }
  std::vector<int> perm(n);
  while (true) {
    for (std::size_t b = 0; b < base.size(); ++b)
      for (std::size_t i = 0; i < base[b].size(); ++i) perm[base[b][i]] = state[b][i];
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      if (!g.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(perm);
    int k = static_cast<int>(state.size()) - 1;
    while (k >= 0 && !std::next_permutation(state[k].begin(), state[k].end()))
      --k;
    if (k < 0) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<int>> vertex_orbits(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : automorphisms(g)) {
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(perm[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> orbits;
  for (auto& [root, vs] : groups) orbits.push_back(vs);
  return orbits;
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("enumerate_connected: n must be in 1..7");
  if (n == 1) return {Graph(1, {})};

  std::vector<std::pair<int, int>> all_pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) all_pairs.emplace_back(i, j);
  const int m = static_cast<int>(all_pairs.size());

  std::vector<std::pair<int, std::string>> keyed;  // (edge count, canonical g6)
  MaskGraph mg;
  mg.n = n;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    mg.adj.assign(n, 0);
    for (int e = 0; e < m; ++e) {
      if (mask & (1u << e)) {
        auto [u, v] = all_pairs[e];
        mg.adj[u] |= 1u << v;
        mg.adj[v] |= 1u << u;
      }
    }
    if (!mg.connected()) continue;

    // Keep a labeled graph only if it equals its own canonical relabeling;
    // that admits exactly one representative per isomorphism class.
    bool sorted_degrees = true;
    for (int v = 0; v + 1 < n; ++v) {
      if (std::popcount(mg.adj[v]) < std::popcount(mg.adj[v + 1])) {
        sorted_degrees = false;
        break;
      }
    }
    if (!sorted_degrees) continue;

    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) edges.push_back(all_pairs[e]);
    Graph g(n, std::move(edges));

    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    const std::uint64_t own = encode_relabeled(g, identity);
    bool minimal = true;
    for_each_sorted_relabeling(g, [&](const std::vector<int>& perm) {
      if (encode_relabeled(g, perm) < own) {
        minimal = false;
        return false;
      }
      return true;
    });
    if (minimal) keyed.emplace_back(g.num_edges(), emit_graph6(g));
  }

  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (const auto& [cnt, g6] : keyed) out.push_back(parse_graph6(g6));
  return out;
}

}  // namespace varmax
