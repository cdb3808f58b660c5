#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fpoly/edge_point.hpp"
#include "fpoly/error.hpp"
#include "fpoly/graph.hpp"
#include "fpoly/matching.hpp"

namespace fpoly {

/// The inequality systems under comparison.
///   kQOriginal  (i) x >= 0, (ii) x(∂v) <= f(v), (iii) x(E[U]) <= floor(f(U)/2)
///   kQUnit      (i)-(iii) plus x(e) <= 1
///   kEdmondsF   (a) 0 <= x <= 1, (b) x(∂v) <= f(v),
///               (c) x(E[U] ∪ F) <= floor((f(U)+|F|)/2) for all F ⊆ ∂U
///   kEdmonds1   (1) x >= 0, (2) x(∂v) <= 1, (3) x(E[U]) <= floor(|U|/2); f ≡ 1 only
enum class SystemVariant { kQOriginal, kQUnit, kEdmondsF, kEdmonds1 };

/// Inequality families, in the order violations are sorted. Lower bounds are
/// reported in <= form, i.e. lhs = -x(e), rhs = 0.
enum class ViolationKind {
  kNonNegative,     // (i)
  kVertexCap,       // (ii)
  kInducedCap,      // (iii)
  kUnitBound,       // x(e) <= 1 added to (i)-(iii)
  kEdgeLower,       // (a), lower side
  kEdgeUpper,       // (a), upper side
  kVertexCapF,      // (b)
  kBlossomF,        // (c)
  kNonNegative1,    // (1)
  kVertexCap1,      // (2)
  kOddSet1,         // (3)
};

/// Short label such as "(iii)" or "unit".
std::string label(ViolationKind kind);
std::string label(SystemVariant variant);
SystemVariant parse_variant(std::string_view text);

struct ConstraintViolation {
  ViolationKind kind;
  VertexSet vertices;  // v, or U
  EdgeSet edges;       // e, or F
  Rational lhs;
  Rational rhs;

  bool operator==(const ConstraintViolation&) const = default;
};

struct CheckOptions {
  bool first_only = false;
  std::size_t vertex_cap = Caps{}.vertices;
  /// Largest |∂U| for which the (c) scan walks all 2^|∂U| subsets F.
  std::size_t boundary_cap = 24;
};

/// Every violated inequality of the variant, sorted by (kind, vertices,
/// edges). With `first_only` the scan stops at the first violation found.
/// Throws PreconditionError for kEdmonds1 on a graph with f ≢ 1.
std::vector<ConstraintViolation> check_system(const WeightedGraph& g, const EdgePoint& x,
                                              SystemVariant variant,
                                              const CheckOptions& options = {});

/// a·y <= bound for y in P_f(G).
struct SeparatingFunctional {
  EdgePoint coefficients;
  Rational bound;
};

struct Member {
  /// Positive convex weights λ_M with Σ λ_M i_M = x.
  std::vector<std::pair<FMatching, Rational>> weights;
};

struct NonMember {
  SeparatingFunctional functional;
};

using MembershipVerdict = std::variant<Member, NonMember>;

/// Decides x ∈ conv{i_M : M an f-matching} with an exact feasibility LP
/// over every f-matching. A Farkas certificate becomes the separating
/// functional. Both kinds of certificate are re-verified before returning.
MembershipVerdict membership(const WeightedGraph& g, const EdgePoint& x,
                             std::size_t edge_cap = Caps{}.edges);

/// True iff a·i_M <= bound for every f-matching M and a·x > bound.
bool separating_check(const WeightedGraph& g, const SeparatingFunctional& functional,
                      const EdgePoint& x, std::size_t edge_cap = Caps{}.edges);

/// True iff the weights are positive, sum to one and reproduce x exactly.
bool convex_weights_check(const WeightedGraph& g, const Member& member, const EdgePoint& x);

struct PointFile {
  EdgePoint point;
  std::vector<std::string> warnings;
};

/// Reads "<edge-id> <p>/<q>" or "<edge-id> <integer>" lines; '#' starts a
/// comment. Missing edges default to 0 and produce a warning.
PointFile parse_point(std::string_view text, std::size_t edge_count);

std::string serialize_point(const EdgePoint& x);

}  // namespace fpoly
