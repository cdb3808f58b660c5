#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "fpoly/edge_point.hpp"
#include "fpoly/error.hpp"
#include "fpoly/graph.hpp"

namespace fpoly {

/// An f-matching stored as an edge bitmask (bit e <=> edge e in M). Only
/// graphs with at most kMaxMaskBits edges can be enumerated, so a 64-bit
/// mask always suffices.
class FMatching {
 public:
  FMatching() = default;
  explicit FMatching(std::uint64_t mask) : mask_(mask) {}

  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(EdgeId e) const noexcept { return e < 64 && (mask_ >> e & 1); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  EdgeSet edges() const;

  auto operator<=>(const FMatching&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

FMatching make_matching(std::span<const EdgeId> edges);

/// |M ∩ ∂v| <= f(v) at every vertex. Duplicate ids count once.
bool is_f_matching(const WeightedGraph& g, std::span<const EdgeId> edges);
bool is_f_matching(const WeightedGraph& g, const FMatching& m);

/// Every f-matching, including the empty one, in increasing bitmask order.
/// Throws CapExceeded when the graph has more than `edge_cap` edges.
std::vector<FMatching> enumerate_all(const WeightedGraph& g, std::size_t edge_cap = Caps{}.edges);

/// The inclusion-maximal f-matchings, in increasing bitmask order.
std::vector<FMatching> enumerate_maximal(const WeightedGraph& g,
                                         std::size_t edge_cap = Caps{}.edges);

/// i_M as a 0/1 point.
EdgePoint indicator(const WeightedGraph& g, const FMatching& m);

}  // namespace fpoly
