#pragma once

#include <cstdint>

#include "fpoly/error.hpp"
#include "fpoly/graph.hpp"
#include "fpoly/rational.hpp"

namespace fpoly {

/// Maximiser of the boundary-augmented density: a vertex set U together
/// with the size of a boundary subset F ⊆ ∂U. Only |F| matters.
struct GammaWitness {
  VertexSet vertices;
  std::size_t boundary_size = 0;

  bool operator==(const GammaWitness&) const = default;
};

struct DensityResult {
  Rational value;
  VertexSet witness;  // empty when the value is the |V| < 2 convention
};

struct GammaResult {
  Rational value;
  GammaWitness witness;  // empty vertex set when G has no edge
};

struct ParameterReport {
  Rational delta_star;
  std::uint64_t delta = 0;
  Rational density_star;
  std::uint64_t density = 0;
  Rational gamma_star;
  std::uint64_t gamma = 0;
  GammaWitness gamma_witness;
  VertexSet density_witness;
};

/// max_v d(v)/f(v).
Rational delta_star(const WeightedGraph& g);
std::uint64_t delta(const WeightedGraph& g);

/// max over U with |U| >= 2 of |E[U]| / floor(f(U)/2); 0 when |V| < 2.
/// Induced subgraphs suffice: extra vertices only raise the denominator.
/// Ties go to the lexicographically smallest U.
DensityResult density_star_with_witness(const WeightedGraph& g,
                                        std::size_t vertex_cap = Caps{}.vertices);
Rational density_star(const WeightedGraph& g, std::size_t vertex_cap = Caps{}.vertices);
std::uint64_t density(const WeightedGraph& g, std::size_t vertex_cap = Caps{}.vertices);

/// max over U ⊆ V, 0 <= s <= |∂U| with f(U)+s >= 2 of
/// (|E[U]| + s) / floor((f(U) + s)/2); 0 when G has no edge. Ties go to the
/// lexicographically smallest U, then the smallest s.
GammaResult gamma_star_with_witness(const WeightedGraph& g,
                                    std::size_t vertex_cap = Caps{}.vertices);
Rational gamma_star(const WeightedGraph& g, std::size_t vertex_cap = Caps{}.vertices);
std::uint64_t gamma(const WeightedGraph& g, std::size_t vertex_cap = Caps{}.vertices);

/// (|E[U]| + s) / floor((f(U) + s)/2) for one candidate. Throws
/// std::invalid_argument if f(U) + s < 2 or s > |∂U|.
Rational gamma_objective(const WeightedGraph& g, std::span<const VertexId> vertices,
                         std::size_t boundary_size);

ParameterReport parameter_report(const WeightedGraph& g,
                                 std::size_t vertex_cap = Caps{}.vertices);

/// max{Δf + 1, Γf} == max{Δf + 1, wf}. Always true for a correct build.
bool lemma5_holds(const ParameterReport& report);
bool lemma5_holds(const WeightedGraph& g, std::size_t vertex_cap = Caps{}.vertices);

}  // namespace fpoly
