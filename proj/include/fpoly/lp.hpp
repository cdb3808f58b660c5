#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "fpoly/rational.hpp"

namespace fpoly::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMinimize, kMaximize };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

struct LinearProgram {
  std::size_t variable_count = 0;
  std::vector<Constraint> rows;
  std::vector<Rational> objective;
  Sense sense = Sense::kMinimize;
  /// Empty means every variable is >= 0. Otherwise one entry per variable;
  /// std::nullopt marks a free variable.
  std::vector<std::optional<Rational>> lower_bounds;

  /// Lower bound of variable j under the convention above.
  std::optional<Rational> lower_bound(std::size_t j) const;
};

/// `dual` holds one multiplier per row for the problem in its own sense.
/// For a minimization, >= rows carry y >= 0 and <= rows y <= 0; the signs
/// flip for a maximization.
struct Optimal {
  Rational value;
  std::vector<Rational> point;
  std::vector<Rational> dual;
};

/// Row multipliers y with y >= 0 on >= rows, y <= 0 on <= rows, such that
/// the aggregated row y^T A x >= y^T b cannot hold for any x within bounds.
struct Infeasible {
  std::vector<Rational> farkas;
};

/// A feasible point and a direction along which the objective improves
/// without bound.
struct Unbounded {
  std::vector<Rational> point;
  std::vector<Rational> ray;
};

using Outcome = std::variant<Optimal, Infeasible, Unbounded>;

struct SolveStats {
  std::size_t phase1_pivots = 0;
  std::size_t phase2_pivots = 0;
};

/// Throws std::invalid_argument when a row, the objective or the bound list
/// has the wrong length.
void validate(const LinearProgram& lp);

/// Two-phase revised simplex over exact rationals with Bland's smallest-index
/// rule for both the entering and the leaving variable. Deterministic.
Outcome solve(const LinearProgram& lp, SolveStats* stats = nullptr);

/// Re-verifies an outcome using only `lp` and rational arithmetic: primal
/// and dual feasibility plus equal objective values for Optimal, the
/// contradiction for Infeasible, and the improving feasible ray for
/// Unbounded.
bool check_certificate(const LinearProgram& lp, const Outcome& outcome);

}  // namespace fpoly::lp
