#include "varmax/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace varmax {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph order must be >= 1");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge rejected");
  edges_ = std::move(edges);
  adj_.assign(n, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  std::vector<bool> seen(n_, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n_;
}

DistanceTable distances(const Graph& g) {
  if (!g.connected())
    throw std::invalid_argument("distances: graph is disconnected");
  const int n = g.order();
  DistanceTable t;
  t.n = n;
  t.d.assign(static_cast<std::size_t>(n) * n, -1);
  t.ecc.assign(n, 0);
  std::vector<int> row;
  for (int s = 0; s < n; ++s) {
    row.assign(n, -1);
    std::queue<int> q;
    q.push(s);
    row[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          q.push(w);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      t.d[static_cast<std::size_t>(s) * n + v] = row[v];
      t.ecc[s] = std::max(t.ecc[s], row[v]);
    }
  }
  return t;
}

BallTable balls(const Graph& g, const DistanceTable& dist) {
  const int n = g.order();
  BallTable t;
  t.members.resize(n);
  for (int v = 0; v < n; ++v) {
    t.members[v].resize(dist.ecc[v] + 1);
    for (int r = 0; r <= dist.ecc[v]; ++r) {
      for (int w = 0; w < n; ++w) {
        if (dist.dist(v, w) <= r) t.members[v][r].push_back(w);
      }
    }
  }
  return t;
}

GraphContext::GraphContext(Graph g) : graph(std::move(g)) {
  dist = distances(graph);
  ball = balls(graph, dist);
  const int n = graph.order();
  shell.resize(n);
  for (int v = 0; v < n; ++v) {
    shell[v].resize(dist.ecc[v] + 1);
    for (int w = 0; w < n; ++w) shell[v][dist.dist(v, w)].push_back(w);
  }
}

}  // namespace varmax
