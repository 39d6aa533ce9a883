#include <optional>

#include "freepi/errors.hpp"
#include "freepi/exactla.hpp"

namespace freepi {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Dense tableau over equality constraints. Column `width` of each row holds
// the right-hand side; `reduced` holds reduced costs with the negated
// objective value in its last slot.
struct Tableau {
  std::vector<Vector> rows;
  std::vector<std::size_t> basis;
  Vector reduced;
  std::size_t width = 0;

  void pivot(std::size_t r, std::size_t c) {
    Vector& pr = rows[r];
    const Scalar inv = 1 / pr[c];
    for (auto& x : pr)
      if (x != 0) x *= inv;
    auto eliminate = [&](Vector& row) {
      if (row[c] == 0) return;
      const Scalar factor = row[c];
      for (std::size_t k = 0; k <= width; ++k)
        if (pr[k] != 0) row[k] -= factor * pr[k];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(reduced);
    basis[r] = c;
  }

  void price(const Vector& cost) {
    reduced.assign(width + 1, 0);
    for (std::size_t j = 0; j < width; ++j) reduced[j] = cost[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Scalar& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k <= width; ++k)
        if (rows[i][k] != 0) reduced[k] -= cb * rows[i][k];
    }
  }

  // Bland's rule: lowest-index improving column enters; among tied ratios
  // the row whose basic variable has the lowest index leaves.
  // Returns false when the objective is unbounded below.
  bool optimize(std::size_t allowed_columns) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed_columns; ++j)
        if (reduced[j] < 0) {
          entering = j;
          break;
        }
      if (!entering) return true;
      const std::size_t c = *entering;
      std::optional<std::size_t> leaving;
      Scalar best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][c] <= 0) continue;
        Scalar ratio = rows[i][width] / rows[i][c];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, c);
    }
  }
};

}  // namespace

LpSolution lp_solve(const LpProblem& p) {
  const std::size_t m = p.constraints.rows();
  const std::size_t n = p.objective.size();
  if ((m > 0 && p.constraints.cols() != n) || p.relations.size() != m || p.rhs.size() != m)
    throw DimensionMismatch("inconsistent LP dimensions");

  // Columns: originals, then one slack/surplus per inequality, then one
  // artificial per row that lacks a natural starting basic column.
  std::vector<Relation> rel = p.relations;
  std::vector<Scalar> sign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (p.rhs[i] < 0) {
      sign[i] = -1;
      if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
      else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
    }
  }
  std::size_t slack_count = 0, artificial_count = 0;
  for (auto r : rel) {
    if (r != Relation::Equal) ++slack_count;
    if (r != Relation::LessEqual) ++artificial_count;
  }
  const std::size_t real_width = n + slack_count;
  Tableau t;
  t.width = real_width + artificial_count;
  t.rows.assign(m, Vector(t.width + 1));
  t.basis.assign(m, 0);
  std::size_t next_slack = n, next_art = real_width;
  for (std::size_t i = 0; i < m; ++i) {
    Vector& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) row[j] = sign[i] * p.constraints(i, j);
    row[t.width] = sign[i] * p.rhs[i];
    if (rel[i] == Relation::LessEqual) {
      row[next_slack] = 1;
      t.basis[i] = next_slack++;
    } else {
      if (rel[i] == Relation::GreaterEqual) row[next_slack++] = -1;
      row[next_art] = 1;
      t.basis[i] = next_art++;
    }
  }

  LpSolution sol;
  if (artificial_count > 0) {
    Vector phase1(t.width, 0);
    for (std::size_t j = real_width; j < t.width; ++j) phase1[j] = 1;
    t.price(phase1);
    t.optimize(t.width);
    if (t.reduced[t.width] != 0) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < real_width) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < real_width; ++j)
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  Vector cost(t.width, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = p.objective[j];
  t.price(cost);
  if (!t.optimize(real_width)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  sol.status = LpStatus::Optimal;
  sol.point.assign(n, 0);
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) sol.point[t.basis[i]] = t.rows[i][t.width];
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += p.objective[j] * sol.point[j];
  return sol;
}

L1Distance l1_distance_to_subspace(std::span<const Scalar> v, const Matrix& basis) {
  const std::size_t rows = v.size();
  if (basis.rows() != rows && !(basis.cols() == 0 && basis.rows() == 0))
    throw DimensionMismatch("vector length does not match subspace basis rows");
  const std::size_t k = basis.rows() == rows ? basis.cols() : 0;
  if (k == 0) return {l1_norm(v), {}};

  // Variables: z+ (k), z- (k), u (rows). For each coordinate i:
  //   B_i (z+ - z-) + u_i >= v_i   and   B_i (z+ - z-) - u_i <= v_i.
  const std::size_t nvars = 2 * k + rows;
  LpProblem lp;
  lp.objective.assign(nvars, 0);
  for (std::size_t i = 0; i < rows; ++i) lp.objective[2 * k + i] = 1;
  lp.constraints = Matrix(2 * rows, nvars);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Scalar& b = basis(i, j);
      if (b == 0) continue;
      lp.constraints(2 * i, j) = b;
      lp.constraints(2 * i, k + j) = -b;
      lp.constraints(2 * i + 1, j) = b;
      lp.constraints(2 * i + 1, k + j) = -b;
    }
    lp.constraints(2 * i, 2 * k + i) = 1;
    lp.constraints(2 * i + 1, 2 * k + i) = -1;
    lp.relations.push_back(Relation::GreaterEqual);
    lp.relations.push_back(Relation::LessEqual);
    lp.rhs.push_back(v[i]);
    lp.rhs.push_back(v[i]);
  }
  const LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::Optimal)
    throw Error("l1 distance LP did not reach an optimum: " + to_string(sol.status));
  L1Distance out;
  out.distance = sol.value;
  out.coefficients.resize(k);
  for (std::size_t j = 0; j < k; ++j) out.coefficients[j] = sol.point[j] - sol.point[k + j];
  return out;
}

}  // namespace freepi
