#include "fpoly/chromatic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fpoly/lp.hpp"

namespace fpoly {
namespace {

// Iterative-deepening search for a partition of E(G) into `target` f-matchings.
class PartitionSearch {
 public:
  explicit PartitionSearch(const WeightedGraph& g) : g_(g), edges_(g.graph().edges()) {
    const std::size_t m = edges_.size();
    previous_parallel_.assign(m, m);
    for (EdgeId i = 0; i < m; ++i) {
      for (EdgeId j = i; j-- > 0;) {
        const bool same = (edges_[j].u == edges_[i].u && edges_[j].v == edges_[i].v) ||
                          (edges_[j].u == edges_[i].v && edges_[j].v == edges_[i].u);
        if (same) {
          previous_parallel_[i] = j;
          break;
        }
      }
    }
  }

  bool run(std::size_t target) {
    target_ = target;
    const std::size_t n = g_.vertex_count();
    residual_.clear();
    masks_.clear();
    colour_.assign(edges_.size(), 0);
    available_.assign(n, 0);
    remaining_.assign(n, 0);
    for (const Edge& e : edges_) {
      ++remaining_[e.u];
      ++remaining_[e.v];
    }
    return assign(0);
  }

  std::vector<FMatching> classes() const {
    std::vector<FMatching> out;
    for (std::uint64_t mask : masks_) out.emplace_back(mask);
    return out;
  }

 private:
  // Capacity still reachable at w: residuals of open classes plus f(w) for
  // every class not yet opened.
  bool capacity_ok(VertexId w) const {
    const std::uint64_t unopened = target_ - residual_.size();
    return available_[w] + unopened * g_.f(w) >= remaining_[w];
  }

  bool assign(EdgeId i) {
    if (i == edges_.size()) return true;
    const Edge& e = edges_[i];
    // Parallel copies take non-decreasing classes; classes open in order of
    // first use. The lexicographically smallest optimal colouring satisfies
    // both, so neither rule loses optimality.
    const std::size_t first =
        previous_parallel_[i] < edges_.size() ? colour_[previous_parallel_[i]] : 0;
    for (std::size_t c = first; c < residual_.size(); ++c) {
      if (residual_[c][e.u] == 0 || residual_[c][e.v] == 0) continue;
      place(i, c);
      if (capacity_ok(e.u) && capacity_ok(e.v) && assign(i + 1)) return true;
      unplace(i, c);
    }
    if (residual_.size() < target_) {
      residual_.emplace_back(g_.weights().begin(), g_.weights().end());
      masks_.push_back(0);
      for (VertexId v = 0; v < g_.vertex_count(); ++v) available_[v] += g_.f(v);
      const std::size_t c = residual_.size() - 1;
      place(i, c);
      if (capacity_ok(e.u) && capacity_ok(e.v) && assign(i + 1)) return true;
      unplace(i, c);
      for (VertexId v = 0; v < g_.vertex_count(); ++v) available_[v] -= g_.f(v);
      residual_.pop_back();
      masks_.pop_back();
    }
    return false;
  }

  void place(EdgeId i, std::size_t c) {
    const Edge& e = edges_[i];
    --residual_[c][e.u];
    --residual_[c][e.v];
    --available_[e.u];
    --available_[e.v];
    --remaining_[e.u];
    --remaining_[e.v];
    masks_[c] |= std::uint64_t{1} << i;
    colour_[i] = c;
  }

  void unplace(EdgeId i, std::size_t c) {
    const Edge& e = edges_[i];
    ++residual_[c][e.u];
    ++residual_[c][e.v];
    ++available_[e.u];
    ++available_[e.v];
    ++remaining_[e.u];
    ++remaining_[e.v];
    masks_[c] &= ~(std::uint64_t{1} << i);
  }

  const WeightedGraph& g_;
  std::span<const Edge> edges_;
  std::vector<EdgeId> previous_parallel_;
  std::size_t target_ = 0;
  std::vector<std::vector<std::uint32_t>> residual_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::size_t> colour_;
  std::vector<std::uint64_t> available_;
  std::vector<std::uint64_t> remaining_;
};

}  // namespace

LpMode parse_lp_mode(std::string_view text) {
  if (text == "equality") return LpMode::kEqualityAll;
  if (text == "cover") return LpMode::kCoverMaximal;
  throw std::invalid_argument("unknown LP mode '" + std::string(text) +
                              "' (expected equality or cover)");
}

std::string_view label(LpMode mode) {
  return mode == LpMode::kEqualityAll ? "equality" : "cover";
}

Rational FractionalColouring::value() const {
  Rational total = 0;
  for (const auto& [m, w] : weights) total += w;
  return total;
}

FractionalIndex frac_index_lp(const WeightedGraph& g, LpMode mode, std::size_t edge_cap) {
  const std::size_t m = g.edge_count();
  if (m == 0) {
    check_cap("edge count for f-matching enumeration", 0, edge_cap);
    return {Rational(0), {}};
  }
  std::vector<FMatching> columns =
      mode == LpMode::kEqualityAll ? enumerate_all(g, edge_cap) : enumerate_maximal(g, edge_cap);
  // The empty matching covers nothing and never carries weight.
  std::erase_if(columns, [](const FMatching& x) { return x.empty(); });

  lp::LinearProgram program;
  program.variable_count = columns.size();
  program.objective.assign(columns.size(), Rational(1));
  const auto relation =
      mode == LpMode::kEqualityAll ? lp::Relation::kEqual : lp::Relation::kGreaterEqual;
  for (EdgeId e = 0; e < m; ++e) {
    lp::Constraint row{std::vector<Rational>(columns.size()), relation, Rational(1)};
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].contains(e)) row.coefficients[j] = 1;
    }
    program.rows.push_back(std::move(row));
  }

  const auto outcome = lp::solve(program);
  const auto* opt = std::get_if<lp::Optimal>(&outcome);
  if (opt == nullptr || !lp::check_certificate(program, outcome)) {
    throw std::logic_error("fractional colouring LP did not return a certified optimum");
  }
  FractionalIndex result{opt->value, {}};
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (opt->point[j] != 0) result.colouring.weights.emplace_back(columns[j], opt->point[j]);
  }
  return result;
}

bool fractional_colouring_check(const WeightedGraph& g, const FractionalColouring& colouring,
                                LpMode mode) {
  std::vector<Rational> cover(g.edge_count());
  for (const auto& [m, w] : colouring.weights) {
    if (w < 0 || w > 1 || !is_f_matching(g, m)) return false;
    for (EdgeId e : m.edges()) cover[e] += w;
  }
  return std::all_of(cover.begin(), cover.end(), [mode](const Rational& c) {
    return mode == LpMode::kEqualityAll ? c == 1 : c >= 1;
  });
}

Rational frac_index_formula(const WeightedGraph& g, std::size_t vertex_cap) {
  const Rational ds = delta_star(g);
  if (ds < 1) {
    throw PreconditionError(
        "the formula max{Δ*_f, Γ*_f} requires the fractional maximum f-degree Δ*_f >= 1 (got " +
        to_string(ds) + ")");
  }
  const Rational gs = gamma_star(g, vertex_cap);
  return ds > gs ? ds : gs;
}

ExactIndex exact_index(const WeightedGraph& g, const Caps& caps) {
  check_cap("edge count for the exact index search", g.edge_count(), caps.edges);
  if (g.edge_count() == 0) return {};
  std::uint64_t lower = delta(g);
  if (g.vertex_count() <= caps.vertices) lower = std::max(lower, density(g, caps.vertices));
  PartitionSearch search(g);
  for (std::uint64_t k = std::max<std::uint64_t>(lower, 1);; ++k) {
    if (search.run(k)) return {k, search.classes()};
  }
}

bool partition_check(const WeightedGraph& g, const std::vector<FMatching>& classes) {
  std::uint64_t seen = 0;
  for (const auto& c : classes) {
    if ((seen & c.mask()) != 0 || !is_f_matching(g, c)) return false;
    seen |= c.mask();
  }
  const std::uint64_t all =
      g.edge_count() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.edge_count()) - 1;
  return seen == all;
}

void evaluate_bounds(BoundsReport& r) {
  const auto& p = r.parameters;
  const Rational chi(static_cast<unsigned long>(r.chi));
  const mpz_class chi_star_ceil = ceil(r.chi_star);

  r.fractional_lower_ok = r.chi_star <= chi;
  r.lower_bound_ok = r.chi >= std::max(p.delta, p.density);
  Rational nns = Rational(9, 8) * static_cast<unsigned long>(p.delta) + Rational(3, 4);
  if (nns < static_cast<unsigned long>(p.density)) nns = static_cast<unsigned long>(p.density);
  r.nns_ok = chi <= nns;
  r.conjecture1_ok = r.chi <= std::max(p.delta + 1, p.density);
  if (p.delta_star >= 1) {
    r.ceil_identity_ok = chi_star_ceil == static_cast<unsigned long>(std::max(p.delta, p.gamma));
  } else {
    r.ceil_identity_ok.reset();
  }
  r.sandwich_ok = chi_star_ceil <= static_cast<unsigned long>(r.chi) &&
                  static_cast<unsigned long>(r.chi) <= chi_star_ceil + 1;
  r.lemma5_ok = lemma5_holds(p);
}

BoundsReport bounds_report(const WeightedGraph& g, const Caps& caps) {
  BoundsReport r;
  r.parameters = parameter_report(g, caps.vertices);
  r.chi_star = frac_index_lp(g, LpMode::kCoverMaximal, caps.edges).value;
  r.chi = exact_index(g, caps).index;
  evaluate_bounds(r);
  return r;
}

}  // namespace fpoly
