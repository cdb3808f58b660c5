#include "fpoly/matching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fpoly {
namespace {

struct Enumerator {
  const WeightedGraph& g;
  std::vector<std::uint32_t> residual;
  std::vector<FMatching>& out;
  bool maximal_only;

  // Decides edges from the highest id downwards so that the "skip" branch,
  // which keeps the high bits clear, is emitted first: the output is then in
  // increasing bitmask order without a sort.
  void run(std::size_t remaining, std::uint64_t chosen) {
    if (remaining == 0) {
      if (!maximal_only || is_maximal(chosen)) out.emplace_back(chosen);
      return;
    }
    const EdgeId e = remaining - 1;
    const Edge& edge = g.graph().edges()[e];
    run(remaining - 1, chosen);
    if (residual[edge.u] > 0 && residual[edge.v] > 0) {
      --residual[edge.u];
      --residual[edge.v];
      run(remaining - 1, chosen | std::uint64_t{1} << e);
      ++residual[edge.u];
      ++residual[edge.v];
    }
  }

  bool is_maximal(std::uint64_t chosen) const {
    const auto edges = g.graph().edges();
    for (EdgeId e = 0; e < edges.size(); ++e) {
      if ((chosen >> e & 1) == 0 && residual[edges[e].u] > 0 && residual[edges[e].v] > 0) {
        return false;
      }
    }
    return true;
  }
};

std::vector<FMatching> enumerate(const WeightedGraph& g, std::size_t edge_cap, bool maximal) {
  check_cap("edge count for f-matching enumeration", g.edge_count(), edge_cap);
  std::vector<FMatching> out;
  Enumerator en{g, std::vector<std::uint32_t>(g.weights().begin(), g.weights().end()), out,
                maximal};
  en.run(g.edge_count(), 0);
  return out;
}

}  // namespace

std::size_t FMatching::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

EdgeSet FMatching::edges() const {
  EdgeSet out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<EdgeId>(std::countr_zero(m)));
  }
  return out;
}

FMatching make_matching(std::span<const EdgeId> edges) {
  std::uint64_t mask = 0;
  for (EdgeId e : edges) {
    if (e >= 64) throw std::out_of_range("edge id " + std::to_string(e) + " does not fit a mask");
    mask |= std::uint64_t{1} << e;
  }
  return FMatching(mask);
}

bool is_f_matching(const WeightedGraph& g, std::span<const EdgeId> edges) {
  EdgeSet unique(edges.begin(), edges.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  std::vector<std::uint64_t> load(g.vertex_count(), 0);
  for (EdgeId e : unique) {
    const Edge& edge = g.graph().edge(e);
    ++load[edge.u];
    ++load[edge.v];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (load[v] > g.f(v)) return false;
  }
  return true;
}

bool is_f_matching(const WeightedGraph& g, const FMatching& m) {
  if (g.edge_count() < 64 && (m.mask() >> g.edge_count()) != 0) {
    throw std::out_of_range("matching references edges beyond the graph");
  }
  return is_f_matching(g, m.edges());
}

std::vector<FMatching> enumerate_all(const WeightedGraph& g, std::size_t edge_cap) {
  return enumerate(g, edge_cap, false);
}

std::vector<FMatching> enumerate_maximal(const WeightedGraph& g, std::size_t edge_cap) {
  return enumerate(g, edge_cap, true);
}

EdgePoint indicator(const WeightedGraph& g, const FMatching& m) {
  EdgePoint x(g.edge_count());
  for (EdgeId e : m.edges()) x[e] = 1;
  return x;
}

}  // namespace fpoly
