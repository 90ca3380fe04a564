#include "varmax/lp.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace varmax {
namespace {

// Simplex tableau over exact rationals. Free variables are split into
// positive/negative parts; every normalized row carries rhs >= 0.
class Simplex {
 public:
  Simplex(int nvars, const std::vector<Constraint>& constraints) : nvars_(nvars) {
    const int m = static_cast<int>(constraints.size());
    rows_.reserve(m);
    // Column layout: [u_0..u_{n-1} | w_0..w_{n-1} | slack/surplus | artificial]
    int extra = 0;
    for (const auto& c : constraints) {
      if (static_cast<int>(c.row.size()) != nvars)
        throw std::invalid_argument("constraint row length mismatch");
      extra += (c.rel == Relation::Equal) ? 1 : 2;  // worst case; trimmed below
    }
    ncols_ = 2 * nvars + extra;
    int next_col = 2 * nvars;
    basis_.assign(m, -1);
    art_of_row_.assign(m, -1);
    slack_of_row_.assign(m, -1);
    row_negated_.assign(m, false);

    for (int i = 0; i < m; ++i) {
      const auto& c = constraints[i];
      Relation rel = c.rel;
      Rat rhs = c.rhs;
      // Normalize toward a slack-basic start: <= rows keep rhs >= 0, >=
      // rows flip to <= whenever that leaves rhs >= 0. Only rows that
      // genuinely cut off the origin get an artificial.
      bool neg = false;
      if (rel == Relation::Equal) {
        neg = rhs < 0;
      } else if (rel == Relation::LessEq) {
        neg = rhs < 0;  // becomes >= with positive rhs: artificial
      } else {
        neg = rhs <= 0;  // becomes <= with rhs >= 0: plain slack
      }
      std::vector<Rat> row(ncols_, Rat(0));
      for (int j = 0; j < nvars; ++j) {
        Rat v = neg ? Rat(-c.row[j]) : c.row[j];
        row[j] = v;
        row[nvars + j] = -v;
      }
      if (neg) {
        rhs = -rhs;
        if (rel == Relation::LessEq)
          rel = Relation::GreaterEq;
        else if (rel == Relation::GreaterEq)
          rel = Relation::LessEq;
      }
      row_negated_[i] = neg;
      if (rel == Relation::LessEq) {
        row[next_col] = 1;
        slack_of_row_[i] = next_col;
        basis_[i] = next_col++;
      } else if (rel == Relation::GreaterEq) {
        row[next_col] = -1;
        slack_of_row_[i] = next_col++;
        row[next_col] = 1;
        art_of_row_[i] = next_col;
        basis_[i] = next_col++;
      } else {
        row[next_col] = 1;
        art_of_row_[i] = next_col;
        basis_[i] = next_col++;
      }
      rows_.push_back(std::move(row));
      rhs_.push_back(std::move(rhs));
    }
    ncols_ = next_col;
    for (auto& r : rows_) r.resize(ncols_);
    barred_.assign(ncols_, false);
    is_art_.assign(ncols_, false);
    for (int a : art_of_row_)
      if (a >= 0) is_art_[a] = true;
  }

  // Phase I: maximize minus the artificial sum. Returns true if feasible.
  bool phase1() {
    red_.assign(ncols_, Rat(0));
    value_ = 0;
    bool any_artificial = false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (art_of_row_[i] >= 0) {
        any_artificial = true;
        for (int j = 0; j < ncols_; ++j) red_[j] += rows_[i][j];
        value_ -= rhs_[i];
      }
    }
    if (!any_artificial) return true;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (art_of_row_[i] >= 0) red_[art_of_row_[i]] = 0;
    run();
    if (value_ != 0) return false;
    // Drive zero-valued artificials out of the basis; a row with no real
    // pivot left is redundant and gets dropped.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < 0 || !is_art_[basis_[i]]) continue;
      int pivot_col = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (!is_art_[j] && rows_[i][j] != 0) {
          pivot_col = j;
          break;
        }
      }
      if (pivot_col >= 0)
        pivot(static_cast<int>(i), pivot_col);
      else
        basis_[i] = -1;  // redundant row; ignore from now on
    }
    for (int j = 0; j < ncols_; ++j)
      if (is_art_[j]) barred_[j] = true;
    return true;
  }

  // Phase II over the given maximization objective (length nvars).
  LPStatus phase2(const std::vector<Rat>& objective) {
    red_.assign(ncols_, Rat(0));
    for (int j = 0; j < nvars_; ++j) {
      red_[j] = objective[j];
      red_[nvars_ + j] = -objective[j];
    }
    value_ = 0;
    // Eliminate basic columns from the fresh cost row.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < 0) continue;
      const Rat coeff = red_[basis_[i]];
      if (coeff == 0) continue;
      for (int j = 0; j < ncols_; ++j) red_[j] -= coeff * rows_[i][j];
      value_ += coeff * rhs_[i];
    }
    return run();
  }

  Rat value() const { return value_; }

  std::vector<Rat> primal_point() const {
    std::vector<Rat> x(nvars_, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int b = basis_[i];
      if (b < 0) continue;
      if (b < nvars_)
        x[b] += rhs_[i];
      else if (b < 2 * nvars_)
        x[b - nvars_] -= rhs_[i];
    }
    return x;
  }

  // Dual multipliers per input row, mapped back through row negation. The
  // artificial (or slack) column of a row carries c_col - y_i * (+-1), so
  // y_i reads off the final reduced-cost row.
  std::vector<Rat> duals() const {
    std::vector<Rat> y(rows_.size(), Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int col = art_of_row_[i] >= 0 ? art_of_row_[i] : slack_of_row_[i];
      Rat yi = -red_[col];
      if (row_negated_[i]) yi = -yi;
      y[i] = yi;
    }
    return y;
  }

 private:
  LPStatus run() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (!barred_[j] && red_[j] > 0) {
          enter = j;
          break;  // Bland: smallest improving index
        }
      }
      if (enter < 0) return LPStatus::Optimal;
      int leave = -1;
      Rat best_ratio(0);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (basis_[i] < 0) continue;
        if (rows_[i][enter] > 0) {
          Rat ratio = rhs_[i] / rows_[i][enter];
          if (leave < 0 || ratio < best_ratio ||
              (ratio == best_ratio && basis_[i] < basis_[leave])) {
            leave = static_cast<int>(i);
            best_ratio = ratio;
          }
        }
      }
      if (leave < 0) return LPStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    const Rat p = rows_[row][col];
    for (int j = 0; j < ncols_; ++j) rows_[row][j] /= p;
    rhs_[row] /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      const Rat factor = rows_[i][col];
      if (factor == 0) continue;
      for (int j = 0; j < ncols_; ++j) rows_[i][j] -= factor * rows_[row][j];
      rhs_[i] -= factor * rhs_[row];
    }
    const Rat rfactor = red_[col];
    if (rfactor != 0) {
      for (int j = 0; j < ncols_; ++j) red_[j] -= rfactor * rows_[row][j];
      value_ += rfactor * rhs_[row];
    }
    basis_[row] = col;
  }

  int nvars_;
  int ncols_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<Rat> red_;
  Rat value_{0};
  std::vector<int> basis_;
  std::vector<int> art_of_row_;
  std::vector<int> slack_of_row_;
  std::vector<bool> row_negated_;
  std::vector<bool> barred_;
  std::vector<bool> is_art_;
};

}  // namespace

LPResult solve_lp(const LinearProgram& lp) {
  if (static_cast<int>(lp.objective.size()) != lp.nvars)
    throw std::invalid_argument("objective length mismatch");
  Simplex s(lp.nvars, lp.constraints);
  LPResult result;
  if (!s.phase1()) {
    result.status = LPStatus::Infeasible;
    return result;
  }
  std::vector<Rat> obj = lp.objective;
  if (lp.sense == Sense::Minimize)
    for (auto& c : obj) c = -c;
  const LPStatus st = s.phase2(obj);
  result.status = st;
  if (st == LPStatus::Optimal) {
    result.value = lp.sense == Sense::Minimize ? Rat(-s.value()) : s.value();
    result.witness = s.primal_point();
    result.duals = s.duals();
  }
  return result;
}

FeasibilityResult feasible(int nvars, const std::vector<Constraint>& constraints) {
  Simplex s(nvars, constraints);
  FeasibilityResult r;
  r.feasible = s.phase1();
  if (r.feasible) r.witness = s.primal_point();
  return r;
}

bool verify_dual_certificate(const LinearProgram& lp, const LPResult& result) {
  if (result.status != LPStatus::Optimal) return false;
  if (result.duals.size() != lp.constraints.size()) return false;
  // Certificate is stated for the maximization form.
  std::vector<Rat> cmax = lp.objective;
  Rat vmax = result.value;
  if (lp.sense == Sense::Minimize) {
    for (auto& c : cmax) c = -c;
    vmax = -vmax;
  }
  std::vector<Rat> combo(lp.nvars, Rat(0));
  Rat total(0);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& con = lp.constraints[i];
    const Rat& y = result.duals[i];
    if (con.rel == Relation::LessEq && y < 0) return false;
    if (con.rel == Relation::GreaterEq && y > 0) return false;
    for (int j = 0; j < lp.nvars; ++j) combo[j] += y * con.row[j];
    total += y * con.rhs;
  }
  for (int j = 0; j < lp.nvars; ++j)
    if (combo[j] != cmax[j]) return false;
  return total == vmax;
}

namespace {

// Exact Gaussian elimination; returns the unique solution of rows*x = rhs
// when it exists.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b, int nvars) {
  const int m = static_cast<int>(a.size());
  int rank = 0;
  std::vector<int> pivot_col_of_row;
  for (int col = 0; col < nvars && rank < m; ++col) {
    int pr = -1;
    for (int i = rank; i < m; ++i) {
      if (a[i][col] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(a[rank], a[pr]);
    std::swap(b[rank], b[pr]);
    const Rat p = a[rank][col];
    for (int j = col; j < nvars; ++j) a[rank][j] /= p;
    b[rank] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == rank) continue;
      const Rat f = a[i][col];
      if (f == 0) continue;
      for (int j = col; j < nvars; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  if (rank < nvars) return std::nullopt;  // underdetermined
  for (int i = rank; i < m; ++i)
    if (b[i] != 0) return std::nullopt;  // inconsistent
  std::vector<Rat> x(nvars, Rat(0));
  for (int i = 0; i < rank; ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

bool satisfies_all(const std::vector<Constraint>& constraints, const std::vector<Rat>& x) {
  for (const auto& c : constraints) {
    Rat lhs(0);
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.row[j] * x[j];
    switch (c.rel) {
      case Relation::LessEq:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

bool recession_cone_nontrivial(const Polytope& poly) {
  // Direction d with A_eq d = 0 and inequality rows pointing inward;
  // nontrivial iff some coordinate can be pinned to +-1.
  std::vector<Constraint> cone;
  for (const auto& c : poly.constraints) {
    Constraint h;
    h.row = c.row;
    h.rel = c.rel;
    h.rhs = 0;
    cone.push_back(std::move(h));
  }
  for (int j = 0; j < poly.nvars; ++j) {
    for (int s : {1, -1}) {
      std::vector<Constraint> sys = cone;
      Constraint pin;
      pin.row.assign(poly.nvars, Rat(0));
      pin.row[j] = 1;
      pin.rel = Relation::Equal;
      pin.rhs = s;
      sys.push_back(std::move(pin));
      if (feasible(poly.nvars, sys).feasible) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<Rat>> enumerate_vertices(const Polytope& poly,
                                                 bool assume_bounded,
                                                 long basis_budget) {
  if (!assume_bounded && recession_cone_nontrivial(poly))
    throw std::runtime_error("enumerate_vertices: unbounded polyhedron");

  std::vector<int> eq_rows, ineq_rows;
  for (std::size_t i = 0; i < poly.constraints.size(); ++i) {
    if (poly.constraints[i].rel == Relation::Equal)
      eq_rows.push_back(static_cast<int>(i));
    else
      ineq_rows.push_back(static_cast<int>(i));
  }

  // Rank of the equality block determines how many inequalities must be
  // activated to pin a vertex.
  int eq_rank = 0;
  {
    std::vector<std::vector<Rat>> a;
    for (int i : eq_rows) a.push_back(poly.constraints[i].row);
    const int m = static_cast<int>(a.size());
    int rank = 0;
    for (int col = 0; col < poly.nvars && rank < m; ++col) {
      int pr = -1;
      for (int i = rank; i < m; ++i)
        if (a[i][col] != 0) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      std::swap(a[rank], a[pr]);
      for (int i = rank + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        const Rat f = a[i][col] / a[rank][col];
        for (int j = col; j < poly.nvars; ++j) a[i][j] -= f * a[rank][j];
      }
      ++rank;
    }
    eq_rank = rank;
  }

  const int need = poly.nvars - eq_rank;
  if (need < 0) throw std::invalid_argument("enumerate_vertices: overdetermined equalities");
  const int navail = static_cast<int>(ineq_rows.size());
  if (need > navail) return {};

  // Subset-count budget check before enumerating combinations.
  double combos = 1;
  for (int i = 0; i < need; ++i) combos *= static_cast<double>(navail - i) / (i + 1);
  if (combos > static_cast<double>(basis_budget))
    throw std::runtime_error("enumerate_vertices: basis enumeration budget exceeded");

  std::set<std::vector<Rat>> unique_points;
  std::vector<int> pick(need);
  for (int i = 0; i < need; ++i) pick[i] = i;

  auto try_subset = [&]() {
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (int i : eq_rows) {
      a.push_back(poly.constraints[i].row);
      b.push_back(poly.constraints[i].rhs);
    }
    for (int idx : pick) {
      a.push_back(poly.constraints[ineq_rows[idx]].row);
      b.push_back(poly.constraints[ineq_rows[idx]].rhs);
    }
    auto x = solve_square(std::move(a), std::move(b), poly.nvars);
    if (x && satisfies_all(poly.constraints, *x)) unique_points.insert(std::move(*x));
  };

  if (need == 0) {
    try_subset();
  } else {
    while (true) {
      try_subset();
      int k = need - 1;
      while (k >= 0 && pick[k] == navail - need + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int j = k + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  std::vector<std::vector<Rat>> out(unique_points.begin(), unique_points.end());
  if (out.empty() && feasible(poly.nvars, poly.constraints).feasible)
    throw std::runtime_error("enumerate_vertices: feasible set contains no vertex (a line)");
  return out;
}

LinearProgram parse_lp_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  LinearProgram lp;
  bool have_objective = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (!have_objective) {
      if (tokens[0] != "max" && tokens[0] != "min")
        throw std::invalid_argument("lp text: first line must start with max/min");
      lp.sense = tokens[0] == "max" ? Sense::Maximize : Sense::Minimize;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto r = parse_rational(tokens[i]);
        if (!r) throw std::invalid_argument("lp text: bad coefficient " + tokens[i]);
        lp.objective.push_back(*r);
      }
      lp.nvars = static_cast<int>(lp.objective.size());
      have_objective = true;
      continue;
    }
    if (static_cast<int>(tokens.size()) != lp.nvars + 2)
      throw std::invalid_argument("lp text: constraint arity mismatch");
    Constraint c;
    for (int j = 0; j < lp.nvars; ++j) {
      auto r = parse_rational(tokens[j]);
      if (!r) throw std::invalid_argument("lp text: bad coefficient " + tokens[j]);
      c.row.push_back(*r);
    }
    const std::string& rel = tokens[lp.nvars];
    if (rel == "<=")
      c.rel = Relation::LessEq;
    else if (rel == "=" || rel == "==")
      c.rel = Relation::Equal;
    else if (rel == ">=")
      c.rel = Relation::GreaterEq;
    else
      throw std::invalid_argument("lp text: bad relation " + rel);
    auto r = parse_rational(tokens[lp.nvars + 1]);
    if (!r) throw std::invalid_argument("lp text: bad rhs " + tokens[lp.nvars + 1]);
    c.rhs = *r;
    lp.constraints.push_back(std::move(c));
  }
  if (!have_objective) throw std::invalid_argument("lp text: missing objective line");
  return lp;
}

std::string format_lp_text(const LinearProgram& lp) {
  std::string out = lp.sense == Sense::Maximize ? "max" : "min";
  for (const auto& c : lp.objective) out += " " + format_rational(c);
  out += "\n";
  for (const auto& con : lp.constraints) {
    std::string line;
    for (const auto& c : con.row) {
      if (!line.empty()) line += " ";
      line += format_rational(c);
    }
    line += con.rel == Relation::LessEq ? " <=" : (con.rel == Relation::Equal ? " =" : " >=");
    line += " " + format_rational(con.rhs);
    out += line + "\n";
  }
  return out;
}

}  // namespace varmax
