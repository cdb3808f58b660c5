#include "fpoly/lp.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace fpoly::lp {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

Rational row_activity(const Constraint& row, const std::vector<Rational>& x) {
  Rational total = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (row.coefficients[j] != 0) total += row.coefficients[j] * x[j];
  }
  return total;
}

bool satisfies(Relation rel, const Rational& lhs, const Rational& rhs) {
  switch (rel) {
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kEqual: return lhs == rhs;
    case Relation::kGreaterEqual: return lhs >= rhs;
  }
  return false;
}

// Sign rule for a row multiplier of a minimization.
bool multiplier_sign_ok(Relation rel, const Rational& y) {
  switch (rel) {
    case Relation::kLessEqual: return y <= 0;
    case Relation::kEqual: return true;
    case Relation::kGreaterEqual: return y >= 0;
  }
  return false;
}

std::vector<Rational> min_form_objective(const LinearProgram& lp) {
  std::vector<Rational> c = lp.objective;
  if (lp.sense == Sense::kMaximize) {
    for (auto& v : c) v = -v;
  }
  return c;
}

bool primal_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variable_count) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (auto l = lp.lower_bound(j); l && x[j] < *l) return false;
  }
  for (const auto& row : lp.rows) {
    if (!satisfies(row.relation, row_activity(row, x), row.rhs)) return false;
  }
  return true;
}

// A^T y.
std::vector<Rational> aggregate(const LinearProgram& lp, const std::vector<Rational>& y) {
  std::vector<Rational> g(lp.variable_count);
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (y[i] == 0) continue;
    const auto& coeffs = lp.rows[i].coefficients;
    for (std::size_t j = 0; j < lp.variable_count; ++j) {
      if (coeffs[j] != 0) g[j] += coeffs[j] * y[i];
    }
  }
  return g;
}

struct Entry {
  std::size_t row;
  Rational value;
};

/// Revised simplex over the standard form  A z = b, z >= 0, b >= 0, with an
/// explicit basis inverse. Columns are stored sparse.
class RevisedSimplex {
 public:
  RevisedSimplex(std::vector<std::vector<Entry>> columns, std::vector<Rational> rhs,
                 std::vector<std::size_t> initial_basis, std::vector<bool> may_enter)
      : columns_(std::move(columns)),
        basis_(std::move(initial_basis)),
        may_enter_(std::move(may_enter)),
        values_(std::move(rhs)) {
    const std::size_t m = basis_.size();
    inverse_.assign(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) inverse_[i][i] = 1;
    is_basic_.assign(columns_.size(), false);
    for (std::size_t c : basis_) is_basic_[c] = true;
  }

  std::size_t row_count() const { return basis_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }

  // π = c_B B^{-1}.
  std::vector<Rational> multipliers(const std::vector<Rational>& cost) const {
    const std::size_t m = row_count();
    std::vector<Rational> pi(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (inverse_[i][k] != 0) pi[k] += cb * inverse_[i][k];
      }
    }
    return pi;
  }

  Rational reduced_cost(const std::vector<Rational>& cost, const std::vector<Rational>& pi,
                        std::size_t j) const {
    Rational d = cost[j];
    for (const auto& [row, value] : columns_[j]) {
      if (pi[row] != 0) d -= pi[row] * value;
    }
    return d;
  }

  // B^{-1} A_j.
  std::vector<Rational> column(std::size_t j) const {
    const std::size_t m = row_count();
    std::vector<Rational> alpha(m);
    for (const auto& [row, value] : columns_[j]) {
      for (std::size_t i = 0; i < m; ++i) {
        if (inverse_[i][row] != 0) alpha[i] += inverse_[i][row] * value;
      }
    }
    return alpha;
  }

  // Row r of B^{-1} A_j.
  Rational entry(std::size_t r, std::size_t j) const {
    Rational total = 0;
    for (const auto& [row, value] : columns_[j]) {
      if (inverse_[r][row] != 0) total += inverse_[r][row] * value;
    }
    return total;
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational total = 0;
    for (std::size_t i = 0; i < row_count(); ++i) total += cost[basis_[i]] * values_[i];
    return total;
  }

  // Bland: the lowest-index improving column.
  std::size_t entering(const std::vector<Rational>& cost) const {
    const auto pi = multipliers(cost);
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (may_enter_[j] && !is_basic_[j] && reduced_cost(cost, pi, j) < 0) return j;
    }
    return kNone;
  }

  // Minimum ratio; ties go to the row whose basic variable has the lowest index.
  std::size_t leaving(const std::vector<Rational>& alpha) const {
    std::size_t best = kNone;
    for (std::size_t i = 0; i < row_count(); ++i) {
      if (alpha[i] <= 0) continue;
      if (best == kNone) {
        best = i;
        continue;
      }
      const Rational lhs = values_[i] * alpha[best];
      const Rational rhs = values_[best] * alpha[i];
      if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[best])) best = i;
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t j, const std::vector<Rational>& alpha) {
    const std::size_t m = row_count();
    auto& prow = inverse_[r];
    const Rational inv = 1 / alpha[r];
    for (auto& v : prow) {
      if (v != 0) v *= inv;
    }
    values_[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || alpha[i] == 0) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (prow[k] != 0) inverse_[i][k] -= alpha[i] * prow[k];
      }
      values_[i] -= alpha[i] * values_[r];
    }
    is_basic_[basis_[r]] = false;
    is_basic_[j] = true;
    basis_[r] = j;
  }

  // Bland pivots until optimal (returns kNone) or unbounded (returns the
  // entering column; `ray_column` receives B^{-1} A_j).
  std::size_t optimize(const std::vector<Rational>& cost, std::size_t& pivots,
                       std::vector<Rational>& ray_column) {
    for (;;) {
      const std::size_t j = entering(cost);
      if (j == kNone) return kNone;
      auto alpha = column(j);
      const std::size_t r = leaving(alpha);
      if (r == kNone) {
        ray_column = std::move(alpha);
        return j;
      }
      pivot(r, j, alpha);
      ++pivots;
    }
  }

  std::vector<Rational> values() const {
    std::vector<Rational> z(columns_.size());
    for (std::size_t i = 0; i < row_count(); ++i) z[basis_[i]] = values_[i];
    return z;
  }


 private:
  std::vector<std::vector<Entry>> columns_;
  std::vector<std::size_t> basis_;
  std::vector<bool> may_enter_;
  std::vector<bool> is_basic_;
  std::vector<Rational> values_;
  std::vector<std::vector<Rational>> inverse_;
};

}  // namespace

std::optional<Rational> LinearProgram::lower_bound(std::size_t j) const {
  if (lower_bounds.empty()) return Rational(0);
  return lower_bounds.at(j);
}

void validate(const LinearProgram& lp) {
  if (lp.objective.size() != lp.variable_count) {
    throw std::invalid_argument("objective has " + std::to_string(lp.objective.size()) +
                                " coefficients for " + std::to_string(lp.variable_count) +
                                " variables");
  }
  if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != lp.variable_count) {
    throw std::invalid_argument("lower bound list length differs from the variable count");
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rows[i].coefficients.size() != lp.variable_count) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(lp.rows[i].coefficients.size()) +
                                  " coefficients for " + std::to_string(lp.variable_count) +
                                  " variables");
    }
  }
}

Outcome solve(const LinearProgram& lp, SolveStats* stats) {
  validate(lp);
  const std::size_t n = lp.variable_count;
  const std::size_t m = lp.rows.size();

  // Column layout: shifted structural columns (two per free variable), then
  // one slack per inequality row, then artificials where no slack can serve
  // as the initial basic column.
  std::vector<std::size_t> pos(n), neg(n, kNone);
  std::vector<Rational> shift(n);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos[j] = cols++;
    if (auto l = lp.lower_bound(j)) {
      shift[j] = *l;
    } else {
      neg[j] = cols++;
    }
  }

  std::vector<int> sign(m, 1);
  std::vector<Rational> b(m);
  std::vector<std::size_t> slack(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    b[i] = row.rhs - row_activity(row, shift);
    if (b[i] < 0) sign[i] = -1;
    if (row.relation != Relation::kEqual) slack[i] = cols++;
  }
  const std::size_t first_artificial = cols;
  std::vector<std::size_t> initial(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    const int slack_sign = lp.rows[i].relation == Relation::kLessEqual ? 1 : -1;
    if (slack[i] != kNone && slack_sign * sign[i] == 1) {
      initial[i] = slack[i];
    } else {
      initial[i] = cols++;
    }
  }

  std::vector<std::vector<Entry>> columns(cols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (row.coefficients[j] == 0) continue;
      const Rational a = sign[i] * row.coefficients[j];
      columns[pos[j]].push_back({i, a});
      if (neg[j] != kNone) columns[neg[j]].push_back({i, -a});
    }
    if (slack[i] != kNone) {
      columns[slack[i]].push_back(
          {i, Rational(sign[i] * (row.relation == Relation::kLessEqual ? 1 : -1))});
    }
    if (initial[i] >= first_artificial) columns[initial[i]].push_back({i, Rational(1)});
    b[i] *= sign[i];
  }
  std::vector<bool> may_enter(cols, true);
  for (std::size_t j = first_artificial; j < cols; ++j) may_enter[j] = false;
  RevisedSimplex simplex(std::move(columns), b, initial, std::move(may_enter));

  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  st = {};

  // Row multipliers of the original rows: π_i re-signed.
  auto row_multipliers = [&](const std::vector<Rational>& cost) {
    auto pi = simplex.multipliers(cost);
    for (std::size_t i = 0; i < m; ++i) pi[i] *= sign[i];
    return pi;
  };

  std::vector<Rational> ray_column;
  if (first_artificial < cols) {
    std::vector<Rational> phase1(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = 1;
    simplex.optimize(phase1, st.phase1_pivots, ray_column);  // bounded below by zero
    if (simplex.objective(phase1) > 0) return Infeasible{row_multipliers(phase1)};
    for (std::size_t r = 0; r < m; ++r) {
      if (simplex.basis()[r] < first_artificial) continue;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (simplex.entry(r, j) != 0) {
          simplex.pivot(r, j, simplex.column(j));
          ++st.phase1_pivots;
          break;
        }
      }
      // A row with no structural or slack entry left is redundant; its
      // artificial stays basic at zero and no later pivot touches it.
    }
  }

  const auto c = min_form_objective(lp);
  std::vector<Rational> phase2(cols);
  for (std::size_t j = 0; j < n; ++j) {
    phase2[pos[j]] = c[j];
    if (neg[j] != kNone) phase2[neg[j]] = -c[j];
  }
  const std::size_t unbounded_col = simplex.optimize(phase2, st.phase2_pivots, ray_column);

  auto to_original = [&](const std::vector<Rational>& zz, bool add_shift) {
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = zz[pos[j]];
      if (neg[j] != kNone) x[j] -= zz[neg[j]];
      if (add_shift) x[j] += shift[j];
    }
    return x;
  };
  auto point = to_original(simplex.values(), true);

  if (unbounded_col != kNone) {
    std::vector<Rational> direction(cols);
    direction[unbounded_col] = 1;
    for (std::size_t i = 0; i < m; ++i) direction[simplex.basis()[i]] = -ray_column[i];
    return Unbounded{std::move(point), to_original(direction, false)};
  }

  Optimal result;
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) result.value += lp.objective[j] * point[j];
  result.dual = row_multipliers(phase2);
  if (lp.sense == Sense::kMaximize) {
    for (auto& y : result.dual) y = -y;
  }
  result.point = std::move(point);
  return result;
}

bool check_certificate(const LinearProgram& lp, const Outcome& outcome) {
  validate(lp);
  const std::size_t n = lp.variable_count;
  const std::size_t m = lp.rows.size();
  const auto c = min_form_objective(lp);

  if (const auto* opt = std::get_if<Optimal>(&outcome)) {
    if (!primal_feasible(lp, opt->point) || opt->dual.size() != m) return false;
    Rational primal = 0;
    for (std::size_t j = 0; j < n; ++j) primal += lp.objective[j] * opt->point[j];
    if (primal != opt->value) return false;

    std::vector<Rational> y = opt->dual;
    if (lp.sense == Sense::kMaximize) {
      for (auto& v : y) v = -v;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!multiplier_sign_ok(lp.rows[i].relation, y[i])) return false;
    }
    const auto g = aggregate(lp, y);
    Rational dual_value = 0;
    for (std::size_t i = 0; i < m; ++i) dual_value += y[i] * lp.rows[i].rhs;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational reduced = c[j] - g[j];
      if (auto l = lp.lower_bound(j)) {
        if (reduced < 0) return false;
        dual_value += *l * reduced;
      } else if (reduced != 0) {
        return false;
      }
    }
    Rational primal_min = 0;
    for (std::size_t j = 0; j < n; ++j) primal_min += c[j] * opt->point[j];
    return dual_value == primal_min;
  }

  if (const auto* inf = std::get_if<Infeasible>(&outcome)) {
    const auto& y = inf->farkas;
    if (y.size() != m) return false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!multiplier_sign_ok(lp.rows[i].relation, y[i])) return false;
    }
    // Any feasible x gives y^T b <= y^T A x = g^T x <= sum_j g_j l_j.
    const auto g = aggregate(lp, y);
    Rational bound = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (auto l = lp.lower_bound(j)) {
        if (g[j] > 0) return false;
        bound += g[j] * *l;
      } else if (g[j] != 0) {
        return false;
      }
    }
    Rational yb = 0;
    for (std::size_t i = 0; i < m; ++i) yb += y[i] * lp.rows[i].rhs;
    return yb > bound;
  }

  const auto& unb = std::get<Unbounded>(outcome);
  if (!primal_feasible(lp, unb.point) || unb.ray.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower_bound(j) && unb.ray[j] < 0) return false;
  }
  for (const auto& row : lp.rows) {
    if (!satisfies(row.relation, row_activity(row, unb.ray), Rational(0))) return false;
  }
  Rational slope = 0;
  for (std::size_t j = 0; j < n; ++j) slope += c[j] * unb.ray[j];
  return slope < 0;
}

}  // namespace fpoly::lp
