#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "varmax/graph.hpp"
#include "varmax/lp.hpp"
#include "varmax/maximal.hpp"
#include "varmax/rational.hpp"

namespace varmax {

// One linear subdomain of the optimization: a pinned minimum vertex, an
// argmax radius per vertex and a sign per edge difference.
struct RegionDescriptor {
  int pinned_min = 0;
  std::vector<int> radius_pattern;
  std::vector<int> edge_sign_pattern;  // +1 / -1 per edge in Graph::edges order
};

enum class CertificateMode { Exact, NumericLowerBound };

struct SearchStats {
  long regions_explored = 0;
  long regions_pruned = 0;
  long regions_feasible = 0;
  long candidates = 0;
  long time_ms = 0;
};

struct ConstantCertificate {
  std::string graph6;
  int n = 0;
  int edges = 0;
  double p = 1;
  CertificateMode mode = CertificateMode::Exact;
  Rat exact_value{0};  // meaningful in Exact mode
  double value = 0;    // float view, always set
  VertexFunction extremizer;
  std::optional<Rat> value_as_fraction;  // annotation only
  SearchStats stats;
};

struct ExactOptions {
  bool use_automorphisms = true;
  int threads = 1;
  long time_budget_ms = 0;  // 0 = no budget; on exhaustion: best-so-far,
                            // demoted to NumericLowerBound mode
  int max_order = 7;
  // Test/debug hook: each feasible region with its enumerated vertices.
  std::function<void(const RegionDescriptor&, const std::vector<std::vector<Rat>>&)>
      region_callback;
};

// Certified C_{G,1} by exhaustive region decomposition: pin min f = 0 at a
// vertex, enumerate argmax-radius and edge-sign patterns depth-first with
// exact LP feasibility pruning, then evaluate the true variation ratio at
// every region polytope vertex.
ConstantCertificate exact_constant_p1(const GraphContext& ctx, const ExactOptions& opts = {});

struct NumericOptions {
  int restarts = 24;  // random starts beyond the always-included indicators
  std::uint64_t seed = 1;
  double step_tol = 1e-9;
  long max_sweeps = 100000;
};

// Multi-start coordinate pattern search on the (scale-invariant) ratio over
// f >= 0. Honest lower bound; deterministic given the seed.
ConstantCertificate numeric_lower_bound(const GraphContext& ctx, double p,
                                        const NumericOptions& opts = {});

struct GridOracleResult {
  double value = 0;
  std::vector<double> witness;            // grid values in {0, 1/L, ..., 1}
  std::optional<Rat> exact_value;         // p = 1 only: exact grid maximum
  std::vector<Rat> exact_witness;
};

// Exhaustive sweep of all f with values on the (levels+1)-point grid.
GridOracleResult grid_oracle(const GraphContext& ctx, double p, int levels);

struct SurveyOptions {
  bool exact = true;
  double p = 1;
  int threads = 0;  // 0 = hardware concurrency
  ExactOptions exact_opts;
  NumericOptions numeric_opts;
};

struct SurveyRow {
  ConstantCertificate cert;
  std::string error;  // nonempty if this graph failed
};

// Per-graph certificates in input order; failures collected, not fatal.
std::vector<SurveyRow> survey(const std::vector<Graph>& graphs, const SurveyOptions& opts);

}  // namespace varmax
