#include "varmax/maximal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace varmax {

std::size_t VertexFunction::size() const {
  return std::visit([](const auto& v) { return v.size(); }, values);
}

bool VertexFunction::nonneg() const {
  return std::visit(
      [](const auto& v) {
        for (const auto& x : v)
          if (x < 0) return false;
        return true;
      },
      values);
}

std::vector<double> VertexFunction::as_doubles() const {
  if (exact()) {
    const auto& v = std::get<std::vector<Rat>>(values);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
  }
  return std::get<std::vector<double>>(values);
}

VertexFunction parse_vertex_function(const std::string& text) {
  std::vector<std::string> tokens;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) tokens.push_back(tok);
  if (tokens.empty()) throw std::invalid_argument("empty vertex function");
  std::vector<Rat> exact;
  bool all_exact = true;
  for (const auto& t : tokens) {
    if (auto r = parse_rational(t)) {
      exact.push_back(*r);
    } else {
      all_exact = false;
      break;
    }
  }
  if (all_exact) return VertexFunction::of(std::move(exact));
  std::vector<double> vals;
  for (const auto& t : tokens) {
    std::size_t pos = 0;
    double d = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad vertex value: " + t);
    vals.push_back(d);
  }
  return VertexFunction::of(std::move(vals));
}

std::string format_vertex_function(const VertexFunction& f, char sep) {
  std::string out;
  if (f.exact()) {
    for (const auto& x : std::get<std::vector<Rat>>(f.values)) {
      if (!out.empty()) out += sep;
      out += format_rational(x);
    }
  } else {
    for (double x : std::get<std::vector<double>>(f.values)) {
      if (!out.empty()) out += sep;
      out += format_double(x);
    }
  }
  return out;
}

namespace {

template <typename T>
T abs_val(const T& x) {
  return x < 0 ? T(-x) : x;
}

}  // namespace

template <typename T>
MaximalProfile<T> maximal_profile(const GraphContext& ctx, const std::vector<T>& f) {
  const int n = ctx.order();
  if (static_cast<int>(f.size()) != n)
    throw std::invalid_argument("function length != graph order");
  MaximalProfile<T> prof;
  prof.mvalues.reserve(n);
  prof.argmax_radius.reserve(n);
  std::vector<T> absf(f.size());
  for (int v = 0; v < n; ++v) absf[v] = abs_val(f[v]);
  for (int v = 0; v < n; ++v) {
    T best = absf[v];
    int best_r = 0;
    T sum = absf[v];
    int count = 1;
    const auto& shells = ctx.shell[v];
    for (int r = 1; r < static_cast<int>(shells.size()); ++r) {
      for (int w : shells[r]) sum += absf[w];
      count += static_cast<int>(shells[r].size());
      T avg = sum / count;
      if (avg > best) {
        best = avg;
        best_r = r;
      }
    }
    prof.mvalues.push_back(best);
    prof.argmax_radius.push_back(best_r);
  }
  return prof;
}

template MaximalProfile<Rat> maximal_profile<Rat>(const GraphContext&, const std::vector<Rat>&);
template MaximalProfile<double> maximal_profile<double>(const GraphContext&, const std::vector<double>&);

MaximalProfile<Rat> maximal_function(const GraphContext& ctx, const std::vector<Rat>& f) {
  return maximal_profile<Rat>(ctx, f);
}
MaximalProfile<double> maximal_function(const GraphContext& ctx, const std::vector<double>& f) {
  return maximal_profile<double>(ctx, f);
}

Rat variation1(const Graph& g, const std::vector<Rat>& f) {
  Rat total(0);
  for (auto [u, v] : g.edges()) total += abs_val(Rat(f[u] - f[v]));
  return total;
}

Rat variation_power(const Graph& g, const std::vector<Rat>& f, int p) {
  if (p < 1) throw std::invalid_argument("variation_power: p must be >= 1");
  Rat total(0);
  for (auto [u, v] : g.edges()) total += pow_int(abs_val(Rat(f[u] - f[v])), p);
  return total;
}

double variation_p(const Graph& g, const std::vector<double>& f, double p) {
  if (!(p > 0)) throw std::invalid_argument("variation_p: p must be positive");
  double total = 0;
  for (auto [u, v] : g.edges()) total += std::pow(std::fabs(f[u] - f[v]), p);
  return std::pow(total, 1.0 / p);
}

Rat variation_ratio1(const GraphContext& ctx, const std::vector<Rat>& f) {
  const Rat denom = variation1(ctx.graph, f);
  if (denom == 0) throw std::invalid_argument("variation ratio of a constant function");
  const auto prof = maximal_profile<Rat>(ctx, f);
  return variation1(ctx.graph, prof.mvalues) / denom;
}

double variation_ratio(const GraphContext& ctx, const std::vector<double>& f, double p) {
  const double denom = variation_p(ctx.graph, f, p);
  if (denom == 0) throw std::invalid_argument("variation ratio of a constant function");
  const auto prof = maximal_profile<double>(ctx, f);
  return variation_p(ctx.graph, prof.mvalues, p) / denom;
}

}  // namespace varmax
