#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "varmax/graph.hpp"
#include "varmax/rational.hpp"

namespace varmax {

// Values attached to the vertices; exact rationals or doubles, tagged.
struct VertexFunction {
  std::variant<std::vector<Rat>, std::vector<double>> values;

  bool exact() const { return values.index() == 0; }
  std::size_t size() const;
  bool nonneg() const;
  std::vector<double> as_doubles() const;

  static VertexFunction of(std::vector<Rat> v) { return {std::move(v)}; }
  static VertexFunction of(std::vector<double> v) { return {std::move(v)}; }
};

// Comma-separated rationals ("1/2,0,0,0") or decimals. Finite decimals are
// kept exact; anything else falls back to doubles.
VertexFunction parse_vertex_function(const std::string& text);
std::string format_vertex_function(const VertexFunction& f, char sep = ',');

template <typename T>
struct MaximalProfile {
  std::vector<T> mvalues;
  std::vector<int> argmax_radius;  // least radius attaining the max
};

// (M_G f)(v) = max over r of the average of |f| over B(v,r).
template <typename T>
MaximalProfile<T> maximal_profile(const GraphContext& ctx, const std::vector<T>& f);

MaximalProfile<Rat> maximal_function(const GraphContext& ctx, const std::vector<Rat>& f);
MaximalProfile<double> maximal_function(const GraphContext& ctx, const std::vector<double>& f);

// Var_1 f = sum over edges of |f(u)-f(v)|, exact.
Rat variation1(const Graph& g, const std::vector<Rat>& f);
// Sum over edges of |f(u)-f(v)|^p for integer p >= 1, exact.
Rat variation_power(const Graph& g, const std::vector<Rat>& f, int p);
// Var_p f = (sum |f(u)-f(v)|^p)^(1/p), float.
double variation_p(const Graph& g, const std::vector<double>& f, double p);

// Var_p(M_G f) / Var_p f. Exact overload requires p = 1 handled by caller
// via variation1; this rational version is the p = 1 ratio.
Rat variation_ratio1(const GraphContext& ctx, const std::vector<Rat>& f);
double variation_ratio(const GraphContext& ctx, const std::vector<double>& f, double p);

}  // namespace varmax
