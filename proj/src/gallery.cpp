#include "fpoly/gallery.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fpoly/chromatic.hpp"
#include "fpoly/lp.hpp"
#include "fpoly/matching.hpp"
#include "fpoly/parameters.hpp"

namespace fpoly {
namespace {

ClaimOutcome outcome(bool passed, std::string detail = {}) {
  return {passed, std::move(detail)};
}

std::string describe(const std::vector<ConstraintViolation>& violations) {
  if (violations.empty()) return "0 violations";
  const auto& v = violations.front();
  return std::to_string(violations.size()) + " violation(s), first " + label(v.kind) + ": " +
         to_string(v.lhs) + " > " + to_string(v.rhs);
}

Claim system_claim(std::string description, const WeightedGraph& g, const EdgePoint& x,
                   SystemVariant variant, bool expect_clean, const Caps& caps) {
  return {std::move(description), [g, x, variant, expect_clean, caps] {
            CheckOptions options;
            options.vertex_cap = caps.vertices;
            const auto violations = check_system(g, x, variant, options);
            return outcome(violations.empty() == expect_clean, describe(violations));
          }};
}

Claim non_member_claim(const WeightedGraph& g, const EdgePoint& x, const Caps& caps) {
  return {"witness lies outside the f-matching polytope (separating functional verified)",
          [g, x, caps] {
            const auto verdict = membership(g, x, caps.edges);
            const auto* non = std::get_if<NonMember>(&verdict);
            if (non == nullptr) return outcome(false, "membership returned convex weights");
            const bool ok = separating_check(g, non->functional, x, caps.edges);
            return outcome(ok, "a·x = " + to_string(non->functional.coefficients.dot(x)) +
                                   " > " + to_string(non->functional.bound));
          }};
}

Rational rational(std::uint64_t num, std::uint64_t den = 1) {
  Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

void add_edges(std::vector<Edge>& edges, VertexId a, VertexId b, std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) edges.push_back({a, b});
}

// The variant's inequalities in <= form; x >= 0 is the LP's default bound.
struct Row {
  std::vector<Rational> coefficients;
  Rational rhs;
};

std::vector<Row> polyhedron_rows(const WeightedGraph& g, SystemVariant variant,
                                 const Caps& caps) {
  const std::size_t m = g.edge_count();
  std::vector<Row> rows;
  auto indicator_row = [m](const EdgeSet& edges, Rational rhs) {
    Row row{std::vector<Rational>(m), std::move(rhs)};
    for (EdgeId e : edges) row.coefficients[e] += 1;
    return row;
  };
  if (variant == SystemVariant::kEdmonds1 && !g.is_unit_weighted()) {
    throw PreconditionError("the edmonds-1 system applies only when f(v) = 1 for every vertex");
  }
  const bool unit_upper = variant == SystemVariant::kQUnit || variant == SystemVariant::kEdmondsF;
  if (unit_upper) {
    for (EdgeId e = 0; e < m; ++e) rows.push_back(indicator_row({e}, Rational(1)));
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto star = g.graph().incident(v);
    const std::uint32_t cap = variant == SystemVariant::kEdmonds1 ? 1 : g.f(v);
    rows.push_back(indicator_row(EdgeSet(star.begin(), star.end()), Rational(cap)));
  }
  check_cap("vertex count for subset enumeration", g.vertex_count(), caps.vertices);
  const VertexMask limit = VertexMask{1} << g.vertex_count();
  for (VertexMask u = 1; u < limit; ++u) {
    const auto inside = induced_edges(g.graph(), u);
    if (variant == SystemVariant::kEdmondsF) {
      const auto leaving = boundary(g.graph(), u);
      check_cap("boundary size for the (c) scan", leaving.size(), 20);
      const std::uint64_t weight = f_sum(g, u);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << leaving.size()); ++bits) {
        EdgeSet support = inside;
        for (std::size_t i = 0; i < leaving.size(); ++i) {
          if (bits >> i & 1) support.push_back(leaving[i]);
        }
        if (support.empty()) continue;
        rows.push_back(indicator_row(support, rational((weight + support.size() - inside.size()) / 2)));
      }
      continue;
    }
    if (inside.empty()) continue;
    const std::uint64_t weight =
        variant == SystemVariant::kEdmonds1 ? std::popcount(u) : f_sum(g, u);
    rows.push_back(indicator_row(inside, rational(weight / 2)));
  }
  return rows;
}

std::string graph_key(const GapWitness& w) {
  return serialize_graph(w.graph) + "|" + serialize_point(w.point);
}

// Random point in [0,1]^m: either a convex combination of two or three
// f-matching indicators (inside P_f) or independent coordinates p/q, q <= 4.
EdgePoint sample_point(const WeightedGraph& g, const std::vector<FMatching>& matchings,
                       std::mt19937_64& rng, bool convex) {
  const std::size_t m = g.edge_count();
  EdgePoint x(m);
  if (convex && !matchings.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, matchings.size() - 1);
    std::uniform_int_distribution<int> weight(1, 4);
    const int parts = std::uniform_int_distribution<int>(2, 3)(rng);
    std::vector<std::pair<std::size_t, int>> chosen;
    int total = 0;
    for (int i = 0; i < parts; ++i) {
      chosen.emplace_back(pick(rng), weight(rng));
      total += chosen.back().second;
    }
    for (const auto& [idx, w] : chosen) {
      Rational share(w, total);
      share.canonicalize();
      for (EdgeId e : matchings[idx].edges()) x[e] += share;
    }
    return x;
  }
  std::uniform_int_distribution<int> den(1, 4);
  for (EdgeId e = 0; e < m; ++e) {
    const int q = den(rng);
    const int p = std::uniform_int_distribution<int>(0, q)(rng);
    x[e] = Rational(p, q);
    x[e].canonicalize();
  }
  return x;
}

}  // namespace

std::vector<ClaimResult> verify(const GalleryItem& item) {
  std::vector<ClaimResult> results;
  for (const auto& claim : item.claims) {
    ClaimResult r{claim.description, false, {}};
    try {
      const auto o = claim.check();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& err) {
      r.detail = std::string("error: ") + err.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<ClaimResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

GalleryItem example1() {
  GalleryItem item;
  item.name = "example1";
  item.graph = WeightedGraph(Multigraph(2, {{0, 1}, {0, 1}}), {2, 2}, {"a", "b"});
  item.witness = EdgePoint(std::vector<Rational>{Rational(2), Rational(0)});
  const auto& g = item.graph;
  const auto& x = *item.witness;
  item.claims.push_back(
      system_claim("witness satisfies Q_ORIGINAL (i)-(iii)", g, x, SystemVariant::kQOriginal, true, item.caps));
  item.claims.push_back(
      system_claim("witness violates Q_UNIT (unit bound x <= 1)", g, x, SystemVariant::kQUnit, false, item.caps));
  item.claims.push_back(non_member_claim(g, x, item.caps));
  item.claims.push_back({"Δ*_f = 1", [g] {
                           const auto d = delta_star(g);
                           return outcome(d == 1, to_string(d));
                         }});
  item.claims.push_back({"χ'_f = 1 (E(G) is an f-matching)", [g, caps = item.caps] {
                           const auto r = exact_index(g, caps);
                           return outcome(r.index == 1, std::to_string(r.index));
                         }});
  item.claims.push_back({"the witness search finds a point of Q_f outside P_f", [g, caps = item.caps] {
                           WitnessSearchOptions options;
                           options.caps = caps;
                           const auto w = find_witness(g, SystemVariant::kQOriginal, options);
                           return outcome(w.has_value(), w ? w->str() : "none found");
                         }});
  return item;
}

GalleryItem example2(std::uint64_t k) {
  if (k < 3 || k % 2 == 0) {
    throw PreconditionError("example2 needs an odd cycle length k >= 3 (got " + std::to_string(k) +
                            ")");
  }
  GalleryItem item;
  item.name = "example2_k" + std::to_string(k);
  // Vertex 0 is u, vertex k is u', 1..k-1 are the remaining cycle vertices.
  std::vector<std::string> names{"u"};
  for (std::uint64_t i = 1; i < k; ++i) names.push_back("c" + std::to_string(i));
  names.push_back("u_prime");
  constexpr VertexId u = 0;
  const VertexId u_prime = k;
  std::vector<Edge> edges{{u, u_prime}, {u, u_prime}};
  for (VertexId i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  std::vector<std::uint32_t> weights(k + 1, 1);
  weights[u] = 2;
  weights[u_prime] = 2;
  item.graph = WeightedGraph(Multigraph(k + 1, std::move(edges)), std::move(weights), names);

  EdgePoint x(item.graph.edge_count());
  x[0] = 1;
  x[1] = 0;
  for (EdgeId e = 2; e < x.size(); ++e) x[e] = Rational(1, 2);
  item.witness = x;
  const auto& g = item.graph;

  item.claims.push_back({"f(v) <= d(v) for every vertex", [g] {
                           for (VertexId v = 0; v < g.vertex_count(); ++v) {
                             if (g.f(v) > degree(g.graph(), v)) {
                               return outcome(false, "fails at " + g.name(v));
                             }
                           }
                           return outcome(true);
                         }});
  item.claims.push_back({"x(∂u) = 2, x(∂u') = 1 and x(∂v) = 1 elsewhere", [g, x] {
                           for (VertexId v = 0; v < g.vertex_count(); ++v) {
                             const auto star = g.graph().incident(v);
                             const Rational expected = v == 0 ? 2 : 1;
                             const Rational got = x.sum(star);
                             if (got != expected) {
                               return outcome(false, g.name(v) + ": " + to_string(got));
                             }
                           }
                           return outcome(true);
                         }});
  item.claims.push_back(
      {"|E[U]| <= f(U) - 1 for every non-empty U", [g, caps = item.caps] {
         check_cap("vertex count for subset enumeration", g.vertex_count(), caps.vertices);
         for (VertexMask mask = 1; mask < (VertexMask{1} << g.vertex_count()); ++mask) {
           if (induced_edges(g.graph(), mask).size() + 1 > f_sum(g, mask)) {
             return outcome(false, "fails for U = " + std::to_string(mask));
           }
         }
         return outcome(true);
       }});
  item.claims.push_back(
      system_claim("witness satisfies Q_UNIT ((i)-(iii) and x <= 1)", g, x, SystemVariant::kQUnit, true, item.caps));
  item.claims.push_back(
      {"an f-matching containing e1 holds at most floor(k/2) cycle edges", [g, k, caps = item.caps] {
         std::size_t most = 0;
         for (const auto& m : enumerate_all(g, caps.edges)) {
           if (!m.contains(0)) continue;
           std::size_t cycle = m.size() - (m.contains(1) ? 2 : 1);
           most = std::max(most, cycle);
         }
         return outcome(most == k / 2, "max " + std::to_string(most) + " vs k/2 = " +
                                           to_string(Rational(static_cast<unsigned long>(k), 2)));
       }});
  item.claims.push_back(non_member_claim(g, x, item.caps));
  return item;
}

GalleryItem example3(std::uint64_t k) {
  if (k < 1) throw PreconditionError("example3 needs k >= 1");
  GalleryItem item;
  item.name = "example3_k" + std::to_string(k);
  std::vector<Edge> edges{{0, 3}};
  add_edges(edges, 0, 1, k);
  add_edges(edges, 0, 2, k);
  add_edges(edges, 3, 4, k);
  add_edges(edges, 3, 5, k);
  add_edges(edges, 1, 2, k + 1);
  add_edges(edges, 4, 5, k + 1);
  item.caps.edges = std::max<std::size_t>(item.caps.edges, edges.size());
  item.graph = WeightedGraph(Multigraph(6, std::move(edges)), std::vector<std::uint32_t>(6, 2),
                             {"v1", "v2", "v3", "v4", "v5", "v6"});
  const auto& g = item.graph;
  const Rational half_more = rational(2 * k + 1, 2);
  const Rational two_thirds_more = rational(3 * k + 2, 3);

  item.claims.push_back({"d(v) = 2k+1 for every vertex", [g, k] {
                           for (VertexId v = 0; v < g.vertex_count(); ++v) {
                             if (degree(g.graph(), v) != 2 * k + 1) return outcome(false, g.name(v));
                           }
                           return outcome(true);
                         }});
  item.claims.push_back({"Δ*_f = k + 1/2", [g, half_more] {
                           const auto d = delta_star(g);
                           return outcome(d == half_more, to_string(d));
                         }});
  item.claims.push_back({"w*_f <= Δ*_f", [g, caps = item.caps] {
                           const auto w = density_star(g, caps.vertices);
                           const auto d = delta_star(g);
                           return outcome(w <= d, to_string(w) + " <= " + to_string(d));
                         }});
  item.claims.push_back(
      {"U = {v1,v2,v3}, F = E(v1,v4) gives (|E[U]|+|F|)/floor((f(U)+|F|)/2) = k + 2/3",
       [g, two_thirds_more] {
         const VertexSet u{0, 1, 2};
         const auto leaving = boundary(g.graph(), u);
         if (leaving != EdgeSet{0}) return outcome(false, "∂U is not E(v1,v4)");
         const auto value = gamma_objective(g, u, 1);
         return outcome(value == two_thirds_more, to_string(value));
       }});
  item.claims.push_back({"Γ*_f >= k + 2/3", [g, two_thirds_more, caps = item.caps] {
                           const auto r = gamma_star_with_witness(g, caps.vertices);
                           std::ostringstream detail;
                           detail << to_string(r.value) << " at U = {";
                           for (std::size_t i = 0; i < r.witness.vertices.size(); ++i) {
                             detail << (i ? "," : "") << g.name(r.witness.vertices[i]);
                           }
                           detail << "}, |F| = " << r.witness.boundary_size;
                           return outcome(r.value >= two_thirds_more, detail.str());
                         }});
  item.claims.push_back(
      {"χ'*_f > max{Δ*_f, w*_f}", [g, caps = item.caps] {
         const auto chi = frac_index_lp(g, LpMode::kCoverMaximal, caps.edges).value;
         const auto d = delta_star(g);
         const auto w = density_star(g, caps.vertices);
         const Rational bound = d > w ? d : w;
         return outcome(chi > bound, to_string(chi) + " > " + to_string(bound));
       }});
  item.claims.push_back({"χ'*_f = max{Δ*_f, Γ*_f}", [g, caps = item.caps] {
                           const auto chi = frac_index_lp(g, LpMode::kCoverMaximal, caps.edges).value;
                           const auto formula = frac_index_formula(g, caps.vertices);
                           return outcome(chi == formula, to_string(chi) + " vs " + to_string(formula));
                         }});
  return item;
}

WeightedGraph c4_chord_graph(bool chord_at_a) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  edges.push_back(chord_at_a ? Edge{0, 2} : Edge{1, 3});
  return WeightedGraph(Multigraph(4, std::move(edges)), {2, 2, 1, 1}, {"a", "b", "c", "d"});
}

GalleryItem c4_chord() {
  GalleryItem item;
  item.name = "c4-chord";
  for (bool chord_at_a : {true, false}) {
    auto g = c4_chord_graph(chord_at_a);
    WitnessSearchOptions options;
    options.caps = item.caps;
    auto w = find_witness(g, SystemVariant::kQUnit, options);
    item.graph = std::move(g);
    item.note = chord_at_a ? "chord a-c" : "chord b-d";
    if (w) {
      item.witness = std::move(w);
      break;
    }
  }
  const auto g = item.graph;
  item.claims.push_back({"graph is simple", [g] { return outcome(g.graph().is_simple()); }});
  item.claims.push_back({"a Q_f witness was found (" + item.note + ")", [w = item.witness] {
                           return outcome(w.has_value(), w ? w->str() : "none found");
                         }});
  if (item.witness) {
    item.claims.push_back(system_claim("witness satisfies Q_UNIT ((i)-(iii) and x <= 1)", g, *item.witness,
                                       SystemVariant::kQUnit, true, item.caps));
    item.claims.push_back(non_member_claim(g, *item.witness, item.caps));
  }
  return item;
}

std::vector<std::string> gallery_names() { return {"example1", "example2", "c4-chord", "example3"}; }

GalleryItem gallery_item(std::string_view name, std::optional<std::uint64_t> k) {
  if (name == "example1") return example1();
  if (name == "example2") return example2(k.value_or(3));
  if (name == "example3") return example3(k.value_or(1));
  if (name == "c4-chord") return c4_chord();
  throw std::invalid_argument("unknown gallery item '" + std::string(name) + "'");
}

std::optional<EdgePoint> find_witness(const WeightedGraph& g, SystemVariant variant,
                                      const WitnessSearchOptions& options) {
  const std::size_t m = g.edge_count();
  check_cap("edge count for f-matching enumeration", m, options.caps.edges);
  if (m == 0) return std::nullopt;
  const auto rows = polyhedron_rows(g, variant, options.caps);

  std::vector<std::vector<Rational>> directions;
  for (EdgeId e = 0; e < m; ++e) {
    std::vector<Rational> d(m);
    d[e] = 1;
    directions.push_back(std::move(d));
  }
  for (int s : {1, -1}) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::vector<Rational> d(m);
      for (EdgeId e : g.graph().incident(v)) d[e] += s;
      directions.push_back(std::move(d));
    }
  }
  directions.emplace_back(m, Rational(1));
  for (EdgeId e = 0; e < m; ++e) {
    std::vector<Rational> d(m, Rational(1));
    d[e] = -1;
    directions.push_back(std::move(d));
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t i = 0; i < options.random_directions; ++i) {
    std::vector<Rational> d(m);
    for (auto& c : d) c = coeff(rng);
    directions.push_back(std::move(d));
  }

  CheckOptions check_options;
  check_options.vertex_cap = options.caps.vertices;
  std::set<std::vector<std::string>> tested;
  for (const auto& direction : directions) {
    lp::LinearProgram program;
    program.variable_count = m;
    program.sense = lp::Sense::kMaximize;
    program.objective = direction;
    for (const auto& row : rows) {
      program.rows.push_back({row.coefficients, lp::Relation::kLessEqual, row.rhs});
    }
    const auto result = lp::solve(program);
    const auto* opt = std::get_if<lp::Optimal>(&result);
    if (opt == nullptr) continue;
    std::vector<std::string> key;
    for (const auto& v : opt->point) key.push_back(to_string(v));
    if (!tested.insert(key).second) continue;
    EdgePoint x(opt->point);
    if (std::holds_alternative<NonMember>(membership(g, x, options.caps.edges)) &&
        check_system(g, x, variant, check_options).empty()) {
      return x;
    }
  }
  return std::nullopt;
}

WeightedGraph random_weighted_graph(std::size_t max_vertices, std::size_t max_edges,
                                    std::uint32_t max_f, std::uint64_t seed) {
  if (max_vertices < 1 || max_edges < 1 || max_f < 1) {
    throw std::invalid_argument("random graph limits must be at least 1");
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  const std::size_t m =
      n < 2 ? 0 : std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::uniform_int_distribution<VertexId> vertex(0, n - 1);
  std::vector<Edge> edges;
  while (edges.size() < m) {
    const VertexId a = vertex(rng);
    const VertexId b = vertex(rng);
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::uniform_int_distribution<std::uint32_t> weight(1, max_f);
  std::vector<std::uint32_t> weights(n);
  for (auto& w : weights) w = weight(rng);
  return WeightedGraph(Multigraph(n, std::move(edges)), std::move(weights));
}

SweepReport sweep(std::size_t count, std::uint64_t seed, const SweepLimits& limits) {
  SweepReport report;
  report.seed = seed;
  if (count == 0) return report;

  std::vector<std::pair<std::string, WeightedGraph>> pool;
  pool.emplace_back("example1", example1().graph);
  pool.emplace_back("example2_k3", example2(3).graph);
  pool.emplace_back("c4-chord", c4_chord_graph(true));
  pool.emplace_back("example3_k1", example3(1).graph);
  std::mt19937_64 seeds(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = seeds();
    const std::uint32_t max_f = i % 2 == 0 ? 1 : limits.max_f;
    pool.emplace_back("random#" + std::to_string(i),
                      random_weighted_graph(limits.max_vertices, limits.max_edges, max_f, s));
  }

  std::mt19937_64 point_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const Caps& caps = limits.caps;
  for (const auto& [name, g] : pool) {
    ++report.instances_tested;
    auto fail = [&, &name = name](const std::string& what) {
      report.failures.push_back(name + ": " + what + "\n" + serialize_graph(g));
    };
    try {
      const auto params = parameter_report(g, caps.vertices);
      if (lemma5_holds(params)) {
        ++report.lemma5_confirmed;
      } else {
        fail("max{Δf+1, Γf} = max{Δf+1, wf} identity");
      }
      if (params.gamma_star > std::max(params.delta_star, params.density_star)) {
        ++report.gamma_exceeds_density_count;
      }

      const auto cover = frac_index_lp(g, LpMode::kCoverMaximal, caps.edges);
      const auto equality = frac_index_lp(g, LpMode::kEqualityAll, caps.edges);
      if (cover.value == equality.value &&
          fractional_colouring_check(g, cover.colouring, LpMode::kCoverMaximal) &&
          fractional_colouring_check(g, equality.colouring, LpMode::kEqualityAll)) {
        ++report.mode_agreement_confirmed;
      } else {
        fail("LP modes disagree: " + to_string(cover.value) + " vs " + to_string(equality.value));
      }
      const Rational& chi_star = cover.value;
      if (g.is_unit_weighted()) {
        const Rational expected = std::max(params.delta_star, params.density_star);
        if (chi_star == expected) {
          ++report.corollary3_confirmed;
        } else {
          fail("χ'* = max{Δ*, w*} with f = 1: " + to_string(chi_star) + " vs " + to_string(expected));
        }
      }
      if (params.delta_star >= 1) {
        const Rational expected = std::max(params.delta_star, params.gamma_star);
        if (chi_star == expected) {
          ++report.corollary4_confirmed;
        } else {
          fail("χ'*_f = max{Δ*_f, Γ*_f}: " + to_string(chi_star) + " vs " + to_string(expected));
        }
      }

      if (g.edge_count() <= limits.exact_index_max_edges) {
        BoundsReport bounds;
        bounds.parameters = params;
        bounds.chi_star = chi_star;
        const auto index = exact_index(g, caps);
        bounds.chi = index.index;
        evaluate_bounds(bounds);
        const bool proved = partition_check(g, index.classes) && bounds.fractional_lower_ok &&
                            bounds.lower_bound_ok && bounds.nns_ok &&
                            bounds.ceil_identity_ok.value_or(true) && bounds.lemma5_ok;
        if (proved) {
          ++report.bounds_confirmed;
        } else {
          fail("bound suite, χ'_f = " + std::to_string(bounds.chi));
        }
        if (!bounds.conjecture1_ok || !bounds.sandwich_ok) {
          report.conjecture_exceptions.push_back(name + "\n" + serialize_graph(g));
        }
      }

      if (g.vertex_count() <= limits.polytope_max_vertices &&
          g.edge_count() <= limits.polytope_max_edges && g.edge_count() > 0) {
        const auto matchings = enumerate_all(g, caps.edges);
        CheckOptions options;
        options.vertex_cap = caps.vertices;
        for (std::size_t p = 0; p < limits.points_per_graph; ++p) {
          const auto x = sample_point(g, matchings, point_rng, p % 2 == 0);
          const bool member = std::holds_alternative<Member>(membership(g, x, caps.edges));
          const bool edmonds = check_system(g, x, SystemVariant::kEdmondsF, options).empty();
          if (member == edmonds) {
            ++report.theorem3_confirmed;
          } else {
            fail("membership vs (a)-(c) at " + serialize_point(x));
          }
          if (g.is_unit_weighted()) {
            const bool edmonds1 = check_system(g, x, SystemVariant::kEdmonds1, options).empty();
            if (member == edmonds1) {
              ++report.theorem2_confirmed;
            } else {
              fail("membership vs (1)-(3) at " + serialize_point(x));
            }
          }
          if (member && !check_system(g, x, SystemVariant::kQUnit, options).empty()) {
            fail("member point violates Q_f at " + serialize_point(x));
          }
        }
        if (limits.hunt_witnesses) {
          WitnessSearchOptions options_w;
          options_w.caps = caps;
          options_w.random_directions = limits.witness_directions;
          if (auto w = find_witness(g, SystemVariant::kQUnit, options_w)) {
            report.qf_gap_witnesses.push_back({g, std::move(*w)});
          }
        }
      }
    } catch (const std::exception& err) {
      fail(std::string("exception: ") + err.what());
    }
  }
  std::sort(report.qf_gap_witnesses.begin(), report.qf_gap_witnesses.end(),
            [](const GapWitness& a, const GapWitness& b) { return graph_key(a) < graph_key(b); });
  return report;
}

}  // namespace fpoly
