#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fpoly/error.hpp"
#include "fpoly/graph.hpp"
#include "fpoly/matching.hpp"
#include "fpoly/parameters.hpp"
#include "fpoly/rational.hpp"

namespace fpoly {

/// kEqualityAll: every f-matching is a column and each edge is covered with
/// total weight exactly 1.
/// kCoverMaximal: only maximal f-matchings, each edge covered with weight
/// at least 1. Both give the same minimum.
enum class LpMode { kEqualityAll, kCoverMaximal };

LpMode parse_lp_mode(std::string_view text);
std::string_view label(LpMode mode);

struct FractionalColouring {
  /// Matchings with positive weight, in increasing bitmask order.
  std::vector<std::pair<FMatching, Rational>> weights;

  Rational value() const;
};

struct FractionalIndex {
  Rational value;
  FractionalColouring colouring;
};

/// χ'*_f by exact LP. An edgeless graph has value 0 and an empty weighting.
FractionalIndex frac_index_lp(const WeightedGraph& g, LpMode mode = LpMode::kCoverMaximal,
                              std::size_t edge_cap = Caps{}.edges);

/// True iff every edge is covered exactly once (equality) or at least once
/// (cover) and every weight lies in [0, 1].
bool fractional_colouring_check(const WeightedGraph& g, const FractionalColouring& colouring,
                                LpMode mode);

/// max{Δ*_f, Γ*_f}. Valid only when Δ*_f >= 1; throws PreconditionError
/// otherwise.
Rational frac_index_formula(const WeightedGraph& g, std::size_t vertex_cap = Caps{}.vertices);

struct ExactIndex {
  std::uint64_t index = 0;
  /// One optimal partition of E(G) into f-matchings.
  std::vector<FMatching> classes;
};

/// χ'_f by depth-first branch and bound over edge-to-class assignments.
ExactIndex exact_index(const WeightedGraph& g, const Caps& caps = {});

/// True iff the classes are disjoint f-matchings covering E(G).
bool partition_check(const WeightedGraph& g, const std::vector<FMatching>& classes);

struct BoundsReport {
  std::uint64_t chi = 0;
  Rational chi_star;
  ParameterReport parameters;

  bool fractional_lower_ok = false;  // χ'*_f <= χ'_f
  bool lower_bound_ok = false;       // χ'_f >= max{Δf, wf}
  bool nns_ok = false;               // χ'_f <= max{9/8 Δf + 6/8, wf}
  bool conjecture1_ok = false;       // χ'_f <= max{Δf + 1, wf}
  /// ceil(χ'*_f) == max{Δf, Γf}; empty when Δ*_f < 1.
  std::optional<bool> ceil_identity_ok;
  bool sandwich_ok = false;          // ceil(χ'*_f) <= χ'_f <= ceil(χ'*_f) + 1
  bool lemma5_ok = false;
};

/// Recomputes every flag of the report from its stored numbers.
void evaluate_bounds(BoundsReport& report);

BoundsReport bounds_report(const WeightedGraph& g, const Caps& caps = {});

}  // namespace fpoly
