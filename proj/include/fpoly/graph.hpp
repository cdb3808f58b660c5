#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fpoly {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/// Bit v set <=> vertex v in the subset. Used by the exhaustive subset scans.
using VertexMask = std::uint64_t;

struct Edge {
  VertexId u;
  VertexId v;

  bool operator==(const Edge&) const = default;
};

/// Loopless multigraph on vertices 0..n-1. Edge ids are positions in the
/// edge list; parallel edges are separate entries.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Edge ids incident to v, ascending.
  std::span<const EdgeId> incident(VertexId v) const;

  bool is_simple() const;

  bool operator==(const Multigraph&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// The pair (G, f): a multigraph with a positive integer weight per vertex.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// `names` may be empty, in which case vertices are called v0, v1, ...
  WeightedGraph(Multigraph graph, std::vector<std::uint32_t> weights,
                std::vector<std::string> names = {});

  const Multigraph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }

  std::uint32_t f(VertexId v) const;
  std::span<const std::uint32_t> weights() const noexcept { return weights_; }
  const std::string& name(VertexId v) const;

  /// f(v) == 1 everywhere.
  bool is_unit_weighted() const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  Multigraph graph_;
  std::vector<std::uint32_t> weights_;
  std::vector<std::string> names_;
};

WeightedGraph parse_graph(std::string_view text);

/// Canonical graph-file text. Runs of consecutive identical edges collapse
/// into a multiplicity field, so parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const WeightedGraph& g);

/// E[U]: edges with both ends in U.
EdgeSet induced_edges(const Multigraph& g, std::span<const VertexId> vertices);
/// The boundary of U: edges with exactly one end in U.
EdgeSet boundary(const Multigraph& g, std::span<const VertexId> vertices);
/// E(X, Y) for disjoint X and Y.
EdgeSet cut_edges(const Multigraph& g, std::span<const VertexId> x,
                  std::span<const VertexId> y);
std::size_t degree(const Multigraph& g, VertexId v);
/// f(U), the weight sum over U.
std::uint64_t f_sum(const WeightedGraph& g, std::span<const VertexId> vertices);

// Mask forms of the same operators for the exhaustive scans. The graph must
// have at most kMaxMaskBits vertices.
VertexMask to_mask(const Multigraph& g, std::span<const VertexId> vertices);
VertexSet from_mask(VertexMask mask);
EdgeSet induced_edges(const Multigraph& g, VertexMask mask);
EdgeSet boundary(const Multigraph& g, VertexMask mask);
std::uint64_t f_sum(const WeightedGraph& g, VertexMask mask);

/// True iff the sorted id list of `a` precedes that of `b` lexicographically.
bool lex_less(VertexMask a, VertexMask b);

}  // namespace fpoly
