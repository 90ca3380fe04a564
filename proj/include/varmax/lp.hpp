#pragma once

#include <optional>
#include <string>
#include <vector>

#include "varmax/rational.hpp"

namespace varmax {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Maximize, Minimize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct Constraint {
  std::vector<Rat> row;
  Relation rel = Relation::LessEq;
  Rat rhs{0};
};

// Rational-coefficient LP over free variables. All arithmetic in this
// module is exact; statuses are certified by the simplex itself.
struct LinearProgram {
  int nvars = 0;
  Sense sense = Sense::Maximize;
  std::vector<Rat> objective;
  std::vector<Constraint> constraints;
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value{0};
  std::vector<Rat> witness;
  // Dual multipliers indexed like constraints; sign conventions for a
  // maximization: y >= 0 on <=, y <= 0 on >=, free on =. Present when
  // optimal. They satisfy A^T y = c and b^T y = value exactly.
  std::vector<Rat> duals;
};

// Primal simplex with Bland's rule; Phase I via artificial variables.
// Deterministic: identical inputs pivot identically.
LPResult solve_lp(const LinearProgram& lp);

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rat> witness;  // a feasible point when feasible
};

FeasibilityResult feasible(int nvars, const std::vector<Constraint>& constraints);

// Checks duals returned by solve_lp against the primal system, exactly.
bool verify_dual_certificate(const LinearProgram& lp, const LPResult& result);

struct Polytope {
  int nvars = 0;
  std::vector<Constraint> constraints;
};

inline constexpr long kDefaultBasisBudget = 2'000'000;

// All extreme points by exhaustive basis enumeration: equality rows are
// always active, every (nvars - rank)-subset of the inequalities tried on
// top. Throws on an unbounded polyhedron (checked via recession cone when
// assume_bounded is false) or when the subset count exceeds the budget.
std::vector<std::vector<Rat>> enumerate_vertices(const Polytope& poly,
                                                 bool assume_bounded = false,
                                                 long basis_budget = kDefaultBasisBudget);

// Text form, one constraint per line after the objective:
//   max p/q p/q ...
//   p/q p/q ... <= p/q
LinearProgram parse_lp_text(const std::string& text);
std::string format_lp_text(const LinearProgram& lp);

}  // namespace varmax
