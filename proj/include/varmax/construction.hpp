#pragma once

#include <cstdint>
#include <vector>

#include "varmax/graph.hpp"
#include "varmax/rational.hpp"

namespace varmax {

// Rooted tree with geometric level lengths l_i = 3*2^(i-1)-1, branching k
// below each marked level and k^2 at the last interior level. Its root
// indicator function exhibits arbitrarily large variation ratios.
struct ConstructionSpec {
  int k = 2;  // branching factor, >= 2
  int m = 1;  // number of k-branching stages, >= 1
};

// l_0..l_{m+1}; l_0 = 1, l_i = i + sum_{j<i} l_j.
std::vector<std::int64_t> level_lengths(int m);

struct ConstructionTree {
  Graph graph;
  int k = 0;
  int m = 0;
  int root = 0;
  std::vector<int> a;      // a[i] = a_{i+1}, i = 0..m
  std::vector<int> b;      // b[i] = b_{i+1}, i = 0..m-1
  int w = -1;              // child of b_m on the path toward a_{m+1}
  std::vector<int> level;  // level (= depth) per vertex
  std::vector<std::int64_t> lengths;  // l_0..l_{m+1}
};

// Default vertex budget; VARMAX_BUDGET_VERTICES overrides at the CLI.
inline constexpr std::int64_t kDefaultVertexBudget = 2'000'000;

ConstructionTree build_tree(const ConstructionSpec& spec,
                            std::int64_t vertex_budget = kDefaultVertexBudget);

struct ConstructionReport {
  ConstructionSpec spec;
  std::int64_t vertices = 0;
  double p = 1;
  double ratio = 0;             // Var_p(M f) / Var_p f with f = root indicator
  bool exact_power_valid = false;
  Rat var_power{0};             // Var_p(M f)^p, exact, when p is integer
  // Ingredients of the growth bound: M f at b_m and at w, and the bound
  // (k^m)^(1/p) * (M f(b_m) - M f(w)) when positive.
  Rat mf_bm{0};
  Rat mf_w{0};
  double lower_bound_term = 0;
};

// Evaluates the root-indicator ratio. Ball sizes depend only on the level,
// so the tree is surveyed one representative per level.
ConstructionReport construction_ratio(const ConstructionTree& tree, double p);

struct ConstructionSearchResult {
  ConstructionSpec spec;
  double ratio = 0;
  bool reached_target = false;
  std::int64_t vertices = 0;
};

// Increases k at m = ceil(p)+1 until the ratio exceeds target, within the
// vertex budget; reports best found otherwise.
ConstructionSearchResult witness_large_constant(
    double p, double target, std::int64_t vertex_budget = kDefaultVertexBudget);

}  // namespace varmax
