#include "varmax/construction.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace varmax {

std::vector<std::int64_t> level_lengths(int m) {
  if (m < 0) throw std::invalid_argument("level_lengths: m must be >= 0");
  std::vector<std::int64_t> l(m + 2);
  l[0] = 1;
  std::int64_t sum = 1;
  for (int i = 1; i <= m + 1; ++i) {
    l[i] = i + sum;
    sum += l[i];
    // The recursion and the closed form 3*2^(i-1)-1 must agree.
    if (l[i] != 3 * (std::int64_t{1} << (i - 1)) - 1)
      throw std::logic_error("level_lengths: recursion/closed form mismatch");
  }
  return l;
}

ConstructionTree build_tree(const ConstructionSpec& spec, std::int64_t vertex_budget) {
  if (spec.k < 2) throw std::invalid_argument("build_tree: k must be >= 2");
  if (spec.m < 1) throw std::invalid_argument("build_tree: m must be >= 1");
  const auto lengths = level_lengths(spec.m);
  const std::int64_t depth = lengths[spec.m + 1];

  // children per level: k below levels l_i - 1 (i <= m), k^2 below l_{m+1}-1.
  std::vector<int> fanout(depth, 1);
  for (int i = 1; i <= spec.m; ++i) fanout[lengths[i] - 1] = spec.k;
  fanout[depth - 1] = spec.k * spec.k;

  std::int64_t total = 1, width = 1;
  for (std::int64_t lv = 0; lv < depth; ++lv) {
    width *= fanout[lv];
    total += width;
    if (total > vertex_budget)
      throw std::length_error("build_tree: vertex budget exceeded");
  }

  ConstructionTree tree;
  tree.k = spec.k;
  tree.m = spec.m;
  tree.lengths = lengths;
  tree.level.reserve(total);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(total - 1);

  std::vector<int> current{0};
  tree.level.push_back(0);
  int next_id = 1;
  std::vector<int> leftmost(depth + 1, 0);  // leftmost vertex per level
  for (std::int64_t lv = 0; lv < depth; ++lv) {
    std::vector<int> next;
    next.reserve(current.size() * fanout[lv]);
    for (int parent : current) {
      for (int c = 0; c < fanout[lv]; ++c) {
        edges.emplace_back(parent, next_id);
        tree.level.push_back(static_cast<int>(lv) + 1);
        next.push_back(next_id++);
      }
    }
    leftmost[lv + 1] = next.front();
    current = std::move(next);
  }

  tree.graph = Graph(next_id, std::move(edges));
  tree.root = 0;
  for (int i = 1; i <= spec.m + 1; ++i)
    tree.a.push_back(leftmost[lengths[i] - 1]);
  for (int i = 1; i <= spec.m; ++i) tree.b.push_back(leftmost[lengths[i]]);
  tree.w = leftmost[lengths[spec.m] + 1];
  return tree;
}

namespace {

// |B(v, radius)| by depth-capped BFS over the tree adjacency.
std::int64_t ball_size_at(const Graph& g, int v, int radius) {
  std::vector<int> depth(g.order(), -1);
  std::queue<int> q;
  q.push(v);
  depth[v] = 0;
  std::int64_t count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (depth[u] == radius) continue;
    for (int w : g.neighbors(u)) {
      if (depth[w] < 0) {
        depth[w] = depth[u] + 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count;
}

}  // namespace

ConstructionReport construction_ratio(const ConstructionTree& tree, double p) {
  if (!(p > 0)) throw std::invalid_argument("construction_ratio: p must be positive");
  const int total_depth = static_cast<int>(tree.lengths[tree.m + 1]);

  // Every vertex on a level is equivalent under the tree's automorphisms,
  // so M f is a function of the level alone: 1 at the root and
  // 1/|B(v, level)| below it (the smallest ball that reaches the root).
  std::vector<int> rep(total_depth + 1, -1);
  std::vector<std::int64_t> level_count(total_depth + 1, 0);
  for (int v = 0; v < tree.graph.order(); ++v) {
    ++level_count[tree.level[v]];
    if (rep[tree.level[v]] < 0 || v < rep[tree.level[v]]) rep[tree.level[v]] = v;
  }

  std::vector<Rat> mf(total_depth + 1);
  mf[0] = 1;
  for (int lv = 1; lv <= total_depth; ++lv)
    mf[lv] = Rat(1, Int(ball_size_at(tree.graph, rep[lv], lv)));

  ConstructionReport report;
  report.spec = {tree.k, tree.m};
  report.vertices = tree.graph.order();
  report.p = p;

  const bool integer_p = p >= 1 && std::floor(p) == p && p < 64;
  double sum = 0;
  Rat exact_sum(0);
  for (int lv = 1; lv <= total_depth; ++lv) {
    Rat diff = mf[lv] - mf[lv - 1];
    if (diff < 0) diff = -diff;
    if (integer_p) exact_sum += level_count[lv] * pow_int(diff, static_cast<long>(p));
    sum += static_cast<double>(level_count[lv]) * std::pow(to_double(diff), p);
  }
  // Var_p f = 1: the root indicator meets its single incident edge once.
  report.ratio = std::pow(sum, 1.0 / p);
  report.exact_power_valid = integer_p;
  if (integer_p) report.var_power = exact_sum;

  report.mf_bm = mf[static_cast<int>(tree.lengths[tree.m])];
  report.mf_w = mf[static_cast<int>(tree.lengths[tree.m]) + 1];
  const double gap = to_double(report.mf_bm - report.mf_w);
  if (gap > 0)
    report.lower_bound_term = std::pow(std::pow(double(tree.k), tree.m), 1.0 / p) * gap;
  return report;
}

ConstructionSearchResult witness_large_constant(double p, double target,
                                                std::int64_t vertex_budget) {
  if (!(p > 0) || !(target >= 0))
    throw std::invalid_argument("witness_large_constant: p and target must be positive");
  const int m = static_cast<int>(std::ceil(p)) + 1;  // guarantees m > p
  ConstructionSearchResult best;
  best.spec = {2, m};
  for (int k = 2;; ++k) {
    ConstructionTree tree;
    try {
      tree = build_tree({k, m}, vertex_budget);
    } catch (const std::length_error&) {
      return best;  // budget exhausted; best-so-far, target not reached
    }
    const auto report = construction_ratio(tree, p);
    if (report.ratio > best.ratio) {
      best.spec = {k, m};
      best.ratio = report.ratio;
      best.vertices = report.vertices;
    }
    if (report.ratio > target) {
      best.reached_target = true;
      return best;
    }
  }
}

}  // namespace varmax
