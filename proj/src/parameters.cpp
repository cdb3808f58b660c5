#include "fpoly/parameters.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <stdexcept>

namespace fpoly {
namespace {

// Per-subset edge counts for the exhaustive scans.
struct SubsetCounter {
  const WeightedGraph& g;
  std::vector<VertexMask> edge_ends;

  explicit SubsetCounter(const WeightedGraph& graph) : g(graph) {
    for (const Edge& e : g.graph().edges()) {
      edge_ends.push_back((VertexMask{1} << e.u) | (VertexMask{1} << e.v));
    }
  }

  // {|E[U]|, |∂U|}
  std::pair<std::uint64_t, std::uint64_t> counts(VertexMask u) const {
    std::uint64_t inside = 0;
    std::uint64_t leaving = 0;
    for (VertexMask ends : edge_ends) {
      const int hit = std::popcount(ends & u);
      inside += hit == 2;
      leaving += hit == 1;
    }
    return {inside, leaving};
  }

  std::uint64_t weight(VertexMask u) const {
    std::uint64_t total = 0;
    for (VertexMask m = u; m != 0; m &= m - 1) total += g.weights()[std::countr_zero(m)];
    return total;
  }
};

VertexMask subset_limit(const WeightedGraph& g, std::size_t vertex_cap) {
  check_cap("vertex count for subset enumeration", g.vertex_count(), vertex_cap);
  return VertexMask{1} << g.vertex_count();
}

// Non-negative fraction compared by cross-multiplication; the scans only
// build a Rational for the final maximum.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  std::strong_ordering operator<=>(const Fraction& o) const {
    return static_cast<unsigned __int128>(num) * o.den <=>
           static_cast<unsigned __int128>(o.num) * den;
  }
  bool operator==(const Fraction& o) const { return (*this <=> o) == 0; }
};

Rational ratio(std::uint64_t num, std::uint64_t den) {
  Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

}  // namespace

Rational delta_star(const WeightedGraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");
  Rational best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Rational r = ratio(degree(g.graph(), v), g.f(v));
    if (r > best) best = r;
  }
  return best;
}

std::uint64_t delta(const WeightedGraph& g) { return ceil_natural(delta_star(g)); }

DensityResult density_star_with_witness(const WeightedGraph& g, std::size_t vertex_cap) {
  const VertexMask limit = subset_limit(g, vertex_cap);
  DensityResult result{Rational(0), {}};
  if (g.vertex_count() < 2) return result;
  const SubsetCounter counter(g);
  bool have = false;
  Fraction best;
  VertexMask best_mask = 0;
  for (VertexMask u = 0; u < limit; ++u) {
    if (std::popcount(u) < 2) continue;
    // |U| >= 2 and f >= 1 keep the floor at least 1.
    const Fraction value{counter.counts(u).first, counter.weight(u) / 2};
    if (!have || value > best || (value == best && lex_less(u, best_mask))) {
      have = true;
      best = value;
      best_mask = u;
    }
  }
  result.value = ratio(best.num, best.den);
  result.witness = from_mask(best_mask);
  return result;
}

Rational density_star(const WeightedGraph& g, std::size_t vertex_cap) {
  return density_star_with_witness(g, vertex_cap).value;
}

std::uint64_t density(const WeightedGraph& g, std::size_t vertex_cap) {
  return ceil_natural(density_star(g, vertex_cap));
}

GammaResult gamma_star_with_witness(const WeightedGraph& g, std::size_t vertex_cap) {
  const VertexMask limit = subset_limit(g, vertex_cap);
  GammaResult result{Rational(0), {}};
  if (g.edge_count() == 0) return result;
  const SubsetCounter counter(g);
  bool have = false;
  Fraction best;
  VertexMask best_mask = 0;
  std::size_t best_s = 0;
  for (VertexMask u = 0; u < limit; ++u) {
    const auto [inside, leaving] = counter.counts(u);
    const std::uint64_t weight = counter.weight(u);
    for (std::uint64_t s = 0; s <= leaving; ++s) {
      if (weight + s < 2) continue;
      const Fraction value{inside + s, (weight + s) / 2};
      const bool better = !have || value > best ||
                          (value == best &&
                           (lex_less(u, best_mask) || (u == best_mask && s < best_s)));
      if (better) {
        have = true;
        best = value;
        best_mask = u;
        best_s = s;
      }
    }
  }
  result.value = ratio(best.num, best.den);
  result.witness = {from_mask(best_mask), best_s};
  return result;
}

Rational gamma_star(const WeightedGraph& g, std::size_t vertex_cap) {
  return gamma_star_with_witness(g, vertex_cap).value;
}

std::uint64_t gamma(const WeightedGraph& g, std::size_t vertex_cap) {
  return ceil_natural(gamma_star(g, vertex_cap));
}

Rational gamma_objective(const WeightedGraph& g, std::span<const VertexId> vertices,
                         std::size_t boundary_size) {
  const std::size_t inside = induced_edges(g.graph(), vertices).size();
  const std::size_t leaving = boundary(g.graph(), vertices).size();
  const std::uint64_t weight = f_sum(g, vertices);
  if (boundary_size > leaving) {
    throw std::invalid_argument("|F| = " + std::to_string(boundary_size) +
                                " exceeds the boundary size " + std::to_string(leaving));
  }
  if (weight + boundary_size < 2) throw std::invalid_argument("f(U) + |F| must be at least 2");
  return ratio(inside + boundary_size, (weight + boundary_size) / 2);
}

ParameterReport parameter_report(const WeightedGraph& g, std::size_t vertex_cap) {
  ParameterReport r;
  r.delta_star = delta_star(g);
  r.delta = ceil_natural(r.delta_star);
  auto dens = density_star_with_witness(g, vertex_cap);
  r.density_star = dens.value;
  r.density = ceil_natural(r.density_star);
  r.density_witness = std::move(dens.witness);
  auto gam = gamma_star_with_witness(g, vertex_cap);
  r.gamma_star = gam.value;
  r.gamma = ceil_natural(r.gamma_star);
  r.gamma_witness = std::move(gam.witness);
  return r;
}

bool lemma5_holds(const ParameterReport& report) {
  return std::max(report.delta + 1, report.gamma) == std::max(report.delta + 1, report.density);
}

bool lemma5_holds(const WeightedGraph& g, std::size_t vertex_cap) {
  return lemma5_holds(parameter_report(g, vertex_cap));
}

}  // namespace fpoly
