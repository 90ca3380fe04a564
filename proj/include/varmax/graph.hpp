#pragma once

#include <string>
#include <utility>
#include <vector>

namespace varmax {

// Simple undirected graph on vertices 0..n-1. Edges are stored once in
// (min,max) order; construction rejects loops and duplicates.
class Graph {
 public:
  Graph() : n_(0) {}
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int order() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  bool connected() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// BFS hop distances plus eccentricities. Requires a connected graph.
struct DistanceTable {
  int n = 0;
  std::vector<int> d;  // row-major n*n
  std::vector<int> ecc;

  int dist(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

// Members of B(v,r) for every vertex and radius 0..ecc(v), sorted, nested.
struct BallTable {
  std::vector<std::vector<std::vector<int>>> members;  // [v][r] -> vertices

  int radius_count(int v) const { return static_cast<int>(members[v].size()); }
  const std::vector<int>& ball(int v, int r) const { return members[v][r]; }
  int ball_size(int v, int r) const { return static_cast<int>(members[v][r].size()); }
};

DistanceTable distances(const Graph& g);
BallTable balls(const Graph& g, const DistanceTable& dist);

// Distance/ball tables bundled with the graph; every engine works off this.
struct GraphContext {
  Graph graph;
  DistanceTable dist;
  BallTable ball;
  // shell[v][r]: vertices at distance exactly r from v, so that running
  // ball sums can be updated shell by shell.
  std::vector<std::vector<std::vector<int>>> shell;

  explicit GraphContext(Graph g);
  int order() const { return graph.order(); }
};

}  // namespace varmax
