#include "varmax/sharp_constant.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "varmax/canonical.hpp"
#include "varmax/graph6.hpp"

namespace varmax {
namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

// Constraint rows shared by every region of one graph, precomputed once.
// Radius rows are integer-scaled ball-average comparisons.
struct RegionRows {
  std::vector<Constraint> nonneg;  // f(v) >= 0
  // radius[v][rho]: the block making B(v,rho) the argmax ball at v.
  std::vector<std::vector<std::vector<Constraint>>> radius;
  // sign[e][0]: f(u)-f(v) >= 0, sign[e][1]: the reverse.
  std::vector<std::array<Constraint, 2>> sign;
  Constraint surrogate;  // sum_v f(v) = 1, used only while pruning

  explicit RegionRows(const GraphContext& ctx) {
    const int n = ctx.order();
    for (int v = 0; v < n; ++v) {
      Constraint c;
      c.row.assign(n, Rat(0));
      c.row[v] = 1;
      c.rel = Relation::GreaterEq;
      c.rhs = 0;
      nonneg.push_back(std::move(c));
    }
    radius.resize(n);
    for (int v = 0; v < n; ++v) {
      const int radii = ctx.ball.radius_count(v);
      radius[v].resize(radii);
      for (int rho = 0; rho < radii; ++rho) {
        for (int r = 0; r < radii; ++r) {
          if (r == rho) continue;
          // |B(v,r)| * sum_{B(v,rho)} f - |B(v,rho)| * sum_{B(v,r)} f >= 0
          Constraint c;
          c.row.assign(n, Rat(0));
          const long size_rho = ctx.ball.ball_size(v, rho);
          const long size_r = ctx.ball.ball_size(v, r);
          for (int w : ctx.ball.ball(v, rho)) c.row[w] += size_r;
          for (int w : ctx.ball.ball(v, r)) c.row[w] -= size_rho;
          c.rel = Relation::GreaterEq;
          c.rhs = 0;
          radius[v][rho].push_back(std::move(c));
        }
      }
    }
    for (auto [u, w] : ctx.graph.edges()) {
      std::array<Constraint, 2> pair;
      for (int s = 0; s < 2; ++s) {
        pair[s].row.assign(n, Rat(0));
        pair[s].row[u] = s == 0 ? 1 : -1;
        pair[s].row[w] = s == 0 ? -1 : 1;
        pair[s].rel = Relation::GreaterEq;
        pair[s].rhs = 0;
      }
      sign.push_back(std::move(pair));
    }
    surrogate.row.assign(n, Rat(1));
    surrogate.rel = Relation::Equal;
    surrogate.rhs = 1;
  }
};

struct ItemResult {
  Rat best{-1};
  std::vector<Rat> witness;
  SearchStats stats;
  bool aborted = false;
};

// Depth-first region enumeration below one (pinned vertex, first radius)
// work item. The surrogate normalization sum f = 1 keeps Phase-I pruning
// meaningful on the otherwise homogeneous cone; the true normalization
// Var f = 1 is installed once the sign pattern is complete.
class RegionSearch {
 public:
  RegionSearch(const GraphContext& ctx, const RegionRows& rows, const ExactOptions& opts,
               Clock::time_point start, std::atomic<bool>& abort, std::mutex& cb_mutex)
      : ctx_(ctx), rows_(rows), opts_(opts), start_(start), abort_(abort),
        cb_mutex_(cb_mutex), n_(ctx.order()) {}

  ItemResult run(int pin, int first_radius) {
    out_ = ItemResult{};
    pin_ = pin;
    radius_pattern_.assign(n_, -1);
    sign_pattern_.assign(ctx_.graph.num_edges(), 0);
    stack_.clear();
    for (const auto& c : rows_.nonneg) stack_.push_back(c);
    Constraint pin_row;
    pin_row.row.assign(n_, Rat(0));
    pin_row.row[pin] = 1;
    pin_row.rel = Relation::Equal;
    pin_row.rhs = 0;
    stack_.push_back(std::move(pin_row));
    surrogate_index_ = stack_.size();
    stack_.push_back(rows_.surrogate);

    try_radius(0, first_radius);
    return out_;
  }

 private:
  bool out_of_budget() {
    if (opts_.time_budget_ms > 0 && elapsed_ms(start_) > opts_.time_budget_ms)
      abort_.store(true, std::memory_order_relaxed);
    return abort_.load(std::memory_order_relaxed);
  }

  void try_radius(int v, int rho) {
    if (out_of_budget()) {
      out_.aborted = true;
      return;
    }
    const auto& block = rows_.radius[v][rho];
    const std::size_t mark = stack_.size();
    for (const auto& c : block) stack_.push_back(c);
    radius_pattern_[v] = rho;
    ++out_.stats.regions_explored;
    if (feasible(n_, stack_).feasible) {
      if (v + 1 < n_) {
        for (int r = 0; r < ctx_.ball.radius_count(v + 1); ++r) try_radius(v + 1, r);
      } else {
        dfs_sign(0);
      }
    } else {
      ++out_.stats.regions_pruned;
    }
    stack_.resize(mark);
    radius_pattern_[v] = -1;
  }

  void dfs_sign(int e) {
    if (out_of_budget()) {
      out_.aborted = true;
      return;
    }
    if (e == ctx_.graph.num_edges()) {
      visit_region();
      return;
    }
    for (int s = 0; s < 2; ++s) {
      stack_.push_back(rows_.sign[e][s]);
      sign_pattern_[e] = s == 0 ? 1 : -1;
      ++out_.stats.regions_explored;
      if (feasible(n_, stack_).feasible)
        dfs_sign(e + 1);
      else
        ++out_.stats.regions_pruned;
      stack_.pop_back();
      sign_pattern_[e] = 0;
    }
  }

  void visit_region() {
    ++out_.stats.regions_feasible;
    Polytope poly;
    poly.nvars = n_;
    poly.constraints = stack_;
    // Swap the pruning surrogate for the real normalization Var f = 1,
    // which the completed sign pattern has made linear.
    Constraint norm;
    norm.row.assign(n_, Rat(0));
    const auto& edges = ctx_.graph.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      norm.row[edges[e].first] += sign_pattern_[e];
      norm.row[edges[e].second] -= sign_pattern_[e];
    }
    norm.rel = Relation::Equal;
    norm.rhs = 1;
    poly.constraints[surrogate_index_] = std::move(norm);

    // Pinning plus Var f = 1 bound the region, so the vertex set is total.
    auto vertices = enumerate_vertices(poly, /*assume_bounded=*/true);
    for (const auto& x : vertices) {
      if (!evaluated_.insert(x).second) continue;
      ++out_.stats.candidates;
      if (variation1(ctx_.graph, x) == 0) continue;
      const Rat ratio = variation_ratio1(ctx_, x);
      if (ratio > out_.best || (ratio == out_.best && x < out_.witness)) {
        out_.best = ratio;
        out_.witness = x;
      }
    }
    if (opts_.region_callback) {
      RegionDescriptor desc{pin_, radius_pattern_, sign_pattern_};
      std::lock_guard<std::mutex> lock(cb_mutex_);
      opts_.region_callback(desc, vertices);
    }
  }

  const GraphContext& ctx_;
  const RegionRows& rows_;
  const ExactOptions& opts_;
  Clock::time_point start_;
  std::atomic<bool>& abort_;
  std::mutex& cb_mutex_;
  int n_;
  int pin_ = 0;
  std::size_t surrogate_index_ = 0;
  std::vector<Constraint> stack_;
  std::vector<int> radius_pattern_;
  std::vector<int> sign_pattern_;
  std::set<std::vector<Rat>> evaluated_;
  ItemResult out_;
};

}  // namespace

ConstantCertificate exact_constant_p1(const GraphContext& ctx, const ExactOptions& opts) {
  const int n = ctx.order();
  if (n < 2) throw std::invalid_argument("exact_constant_p1: need at least 2 vertices");
  if (n > opts.max_order)
    throw std::invalid_argument("exact_constant_p1: order exceeds the exact-engine limit");
  if (!ctx.graph.connected())
    throw std::invalid_argument("exact_constant_p1: graph must be connected");
  const auto start = Clock::now();

  std::vector<int> pins;
  if (opts.use_automorphisms && n <= kCanonicalOrderLimit) {
    for (const auto& orbit : vertex_orbits(ctx.graph)) pins.push_back(orbit.front());
  } else {
    for (int v = 0; v < n; ++v) pins.push_back(v);
  }

  RegionRows rows(ctx);
  struct WorkItem {
    int pin;
    int radius;
  };
  std::vector<WorkItem> items;
  for (int pin : pins)
    for (int r = 0; r < ctx.ball.radius_count(0); ++r) items.push_back({pin, r});

  std::vector<ItemResult> results(items.size());
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> next{0};
  std::mutex cb_mutex;
  const int nthreads = std::max(1, opts.threads);
  auto worker = [&]() {
    RegionSearch search(ctx, rows, opts, start, abort, cb_mutex);
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= items.size()) break;
      results[idx] = search.run(items[idx].pin, items[idx].radius);
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ConstantCertificate cert;
  cert.graph6 = emit_graph6(ctx.graph);
  cert.n = n;
  cert.edges = ctx.graph.num_edges();
  cert.p = 1;
  Rat best(-1);
  std::vector<Rat> witness;
  bool aborted = false;
  for (const auto& r : results) {
    cert.stats.regions_explored += r.stats.regions_explored;
    cert.stats.regions_pruned += r.stats.regions_pruned;
    cert.stats.regions_feasible += r.stats.regions_feasible;
    cert.stats.candidates += r.stats.candidates;
    aborted = aborted || r.aborted;
    if (r.best > best || (r.best == best && !r.witness.empty() &&
                          (witness.empty() || r.witness < witness))) {
      best = r.best;
      witness = r.witness;
    }
  }
  if (best < 0) throw std::runtime_error("exact_constant_p1: no candidate point found");
  cert.mode = aborted ? CertificateMode::NumericLowerBound : CertificateMode::Exact;
  cert.exact_value = best;
  cert.value = to_double(best);
  cert.value_as_fraction = best;
  cert.extremizer = VertexFunction::of(std::move(witness));
  cert.stats.time_ms = elapsed_ms(start);
  return cert;
}

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Greedy compass search from one start; returns the best ratio reached.
double pattern_search(const GraphContext& ctx, double p, std::vector<double>& f,
                      const NumericOptions& opts) {
  const int n = ctx.order();
  auto ratio_of = [&](const std::vector<double>& g) -> double {
    const double var = variation_p(ctx.graph, g, p);
    if (!(var > 0)) return -1;
    const auto prof = maximal_profile<double>(ctx, g);
    return variation_p(ctx.graph, prof.mvalues, p) / var;
  };
  double peak = *std::max_element(f.begin(), f.end());
  if (!(peak > 0)) return -1;
  for (auto& x : f) x /= peak;
  double cur = ratio_of(f);
  if (cur < 0) return -1;
  double step = 0.25;
  long sweeps = 0;
  std::vector<double> cand = f;
  while (step >= opts.step_tol && sweeps < opts.max_sweeps) {
    ++sweeps;
    bool improved = false;
    for (int v = 0; v < n; ++v) {
      for (double dir : {+1.0, -1.0}) {
        cand = f;
        cand[v] = std::max(0.0, f[v] + dir * step);
        if (cand[v] == f[v]) continue;
        const double r = ratio_of(cand);
        if (r > cur) {
          f = cand;
          cur = r;
          improved = true;
        }
      }
    }
    if (improved) {
      const double m = *std::max_element(f.begin(), f.end());
      if (m > 0)
        for (auto& x : f) x /= m;
    } else {
      step /= 2;
    }
  }
  return cur;
}

}  // namespace

ConstantCertificate numeric_lower_bound(const GraphContext& ctx, double p,
                                        const NumericOptions& opts) {
  if (!(p > 0)) throw std::invalid_argument("numeric_lower_bound: p must be positive");
  const int n = ctx.order();
  if (n < 2) throw std::invalid_argument("numeric_lower_bound: need at least 2 vertices");
  const auto start = Clock::now();

  std::mt19937_64 rng(opts.seed);
  double best = -1;
  std::vector<double> best_witness;
  long starts = 0;

  auto consider = [&](std::vector<double> f) {
    ++starts;
    const double r = pattern_search(ctx, p, f, opts);
    if (r > best) {
      best = r;
      best_witness = f;
    }
  };

  // Indicator seeds first: they realize the known extremizers on complete
  // graphs and paths, so the reported bound is never worse than those.
  for (int v = 0; v < n; ++v) {
    std::vector<double> f(n, 0.0);
    f[v] = 1.0;
    consider(std::move(f));
  }
  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> f(n);
    for (auto& x : f) x = unit_double(rng);
    consider(std::move(f));
  }
  if (best < 0) throw std::runtime_error("numeric_lower_bound: all starts degenerate");

  // Shift to min 0 and rescale to Var_p = 1; both leave the ratio alone.
  const double mn = *std::min_element(best_witness.begin(), best_witness.end());
  for (auto& x : best_witness) x -= mn;
  const double var = variation_p(ctx.graph, best_witness, p);
  if (var > 0)
    for (auto& x : best_witness) x /= var;

  ConstantCertificate cert;
  cert.graph6 = emit_graph6(ctx.graph);
  cert.n = n;
  cert.edges = ctx.graph.num_edges();
  cert.p = p;
  cert.mode = CertificateMode::NumericLowerBound;
  cert.value = best;
  cert.extremizer = VertexFunction::of(std::move(best_witness));
  cert.value_as_fraction = recognize_fraction(best, 120, 1e-9);
  cert.stats.candidates = starts;
  cert.stats.time_ms = elapsed_ms(start);
  return cert;
}

GridOracleResult grid_oracle(const GraphContext& ctx, double p, int levels) {
  if (levels < 1) throw std::invalid_argument("grid_oracle: levels must be >= 1");
  if (!(p > 0)) throw std::invalid_argument("grid_oracle: p must be positive");
  const int n = ctx.order();
  const bool exact = p == 1.0;
  double combos = 1;
  for (int i = 0; i < n; ++i) {
    combos *= levels + 1;
    if (combos > (exact ? 5e6 : 2e8))
      throw std::invalid_argument("grid_oracle: grid too large");
  }

  GridOracleResult result;
  result.value = -1;
  std::vector<int> vals(n, 0);
  Rat best_exact(-1);
  std::vector<Rat> fr(n);
  std::vector<double> fd(n);
  while (true) {
    bool constant = true;
    for (int v = 1; v < n; ++v) {
      if (vals[v] != vals[0]) {
        constant = false;
        break;
      }
    }
    if (!constant) {
      // The ratio is scale invariant, so integer grid values stand in for
      // the unit grid {0, 1/L, ..., 1}.
      if (exact) {
        for (int v = 0; v < n; ++v) fr[v] = vals[v];
        const Rat ratio = variation_ratio1(ctx, fr);
        if (ratio > best_exact) {
          best_exact = ratio;
          result.exact_witness = fr;
        }
      } else {
        for (int v = 0; v < n; ++v) fd[v] = vals[v];
        const double ratio = variation_ratio(ctx, fd, p);
        if (ratio > result.value) {
          result.value = ratio;
          result.witness = fd;
        }
      }
    }
    int k = n - 1;
    while (k >= 0 && vals[k] == levels) vals[k--] = 0;
    if (k < 0) break;
    ++vals[k];
  }
  if (exact) {
    result.exact_value = best_exact;
    result.value = to_double(best_exact);
    result.witness.resize(n);
    for (int v = 0; v < n; ++v) {
      result.exact_witness[v] /= levels;
      result.witness[v] = to_double(result.exact_witness[v]);
    }
  } else {
    for (auto& x : result.witness) x /= levels;
  }
  return result;
}

std::vector<SurveyRow> survey(const std::vector<Graph>& graphs, const SurveyOptions& opts) {
  std::vector<SurveyRow> out(graphs.size());
  std::atomic<std::size_t> next{0};
  int nthreads = opts.threads > 0 ? opts.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  if (!graphs.empty())
    nthreads = std::min(nthreads, static_cast<int>(graphs.size()));

  auto worker = [&]() {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= graphs.size()) break;
      try {
        GraphContext ctx(graphs[idx]);
        if (opts.exact) {
          if (opts.p != 1.0) throw std::invalid_argument("exact survey requires p = 1");
          out[idx].cert = exact_constant_p1(ctx, opts.exact_opts);
        } else {
          out[idx].cert = numeric_lower_bound(ctx, opts.p, opts.numeric_opts);
        }
      } catch (const std::exception& e) {
        out[idx].error = e.what();
      }
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace varmax
