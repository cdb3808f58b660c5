#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpoly/edge_point.hpp"
#include "fpoly/error.hpp"
#include "fpoly/graph.hpp"
#include "fpoly/polytope.hpp"

namespace fpoly {

struct ClaimOutcome {
  bool passed = false;
  std::string detail;
};

/// A checkable statement about a gallery graph. The check calls into the
/// other modules; nothing is precomputed.
struct Claim {
  std::string description;
  std::function<ClaimOutcome()> check;
};

struct GalleryItem {
  std::string name;
  WeightedGraph graph;
  std::optional<EdgePoint> witness;
  std::vector<Claim> claims;
  Caps caps;
  std::string note;
};

struct ClaimResult {
  std::string description;
  bool passed = false;
  std::string detail;
};

/// Runs every claim. A claim that throws is reported as failed.
std::vector<ClaimResult> verify(const GalleryItem& item);
bool all_passed(const std::vector<ClaimResult>& results);

/// Two vertices joined by two parallel edges, f ≡ 2, witness x = (2, 0).
GalleryItem example1();

/// Odd cycle C_k through u, plus u' joined to u by parallel edges e1 (id 0)
/// and e2 (id 1). f(u) = f(u') = 2, 1 elsewhere. Witness: e1 -> 1, e2 -> 0,
/// cycle edges -> 1/2. Requires k odd and k >= 3.
GalleryItem example2(std::uint64_t k);

/// Six vertices v1..v6 with f ≡ 2: one edge v1v4, k parallel edges on each
/// of v1v2, v1v3, v4v5, v4v6 and k+1 on v2v3 and v5v6. Requires k >= 1.
GalleryItem example3(std::uint64_t k);

/// The 4-cycle a-b-c-d with a chord, f(a) = f(b) = 2 and f(c) = f(d) = 1.
/// `chord_at_a` picks the chord a-c, otherwise b-d.
WeightedGraph c4_chord_graph(bool chord_at_a);

/// The C4-with-chord item. Both chord placements are searched for a
/// Q_UNIT witness; the first placement that yields one is used.
GalleryItem c4_chord();

std::vector<std::string> gallery_names();

/// Looks an item up by name; `k` applies to example2 (default 3) and
/// example3 (default 1).
GalleryItem gallery_item(std::string_view name, std::optional<std::uint64_t> k = std::nullopt);

struct WitnessSearchOptions {
  Caps caps;
  std::size_t random_directions = 64;
  std::uint64_t seed = 1;
};

/// Searches the vertices of the variant's polyhedron for a point outside
/// P_f(G). Objective directions: unit vectors, then ± the incidence vector
/// of each vertex star, then the all-ones vector and its copies with one
/// entry negated, then seeded random integer directions in [-3, 3].
/// Each optimum is tested for membership. Not finding a witness does not
/// prove that the systems agree.
std::optional<EdgePoint> find_witness(const WeightedGraph& g, SystemVariant variant,
                                      const WitnessSearchOptions& options = {});

/// Seeded loopless multigraph with 1..max_vertices vertices, 0..max_edges
/// edges (none on a single vertex) and weights in [1, max_f].
WeightedGraph random_weighted_graph(std::size_t max_vertices, std::size_t max_edges,
                                    std::uint32_t max_f, std::uint64_t seed);

struct SweepLimits {
  std::size_t max_vertices = 5;
  std::size_t max_edges = 8;
  std::uint32_t max_f = 3;
  /// Sampled points per graph for the polytope equivalence checks.
  std::size_t points_per_graph = 2;
  std::size_t polytope_max_vertices = 4;
  std::size_t polytope_max_edges = 6;
  /// Largest graph for the branch-and-bound index and the bound suite.
  std::size_t exact_index_max_edges = 10;
  /// Run find_witness(kQUnit) on graphs within the polytope limits.
  bool hunt_witnesses = true;
  std::size_t witness_directions = 64;
  Caps caps{.edges = 21, .vertices = 20};
};

struct GapWitness {
  WeightedGraph graph;
  EdgePoint point;
};

struct SweepReport {
  std::size_t instances_tested = 0;
  std::uint64_t seed = 0;
  std::size_t corollary3_confirmed = 0;
  std::size_t corollary4_confirmed = 0;
  std::size_t lemma5_confirmed = 0;
  std::size_t theorem3_confirmed = 0;
  std::size_t theorem2_confirmed = 0;
  std::size_t mode_agreement_confirmed = 0;
  std::size_t bounds_confirmed = 0;
  /// Instances with Γ*_f > max{Δ*_f, w*_f}.
  std::size_t gamma_exceeds_density_count = 0;
  /// Points satisfying Q_UNIT but outside P_f, sorted.
  std::vector<GapWitness> qf_gap_witnesses;
  /// Instances where the conjectured bound χ'_f <= max{Δf + 1, wf} or the
  /// sandwich around ceil(χ'*_f) fails. Not a bug by itself.
  std::vector<std::string> conjecture_exceptions;
  /// Violations of proved statements; empty on a correct build.
  std::vector<std::string> failures;
};

/// Checks the proved identities on `count` seeded random graphs, with the
/// gallery graphs added to the pool whenever count > 0. Even-numbered draws
/// use f ≡ 1.
SweepReport sweep(std::size_t count, std::uint64_t seed, const SweepLimits& limits = {});

}  // namespace fpoly
