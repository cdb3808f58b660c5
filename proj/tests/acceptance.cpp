// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fpoly/chromatic.hpp"
#include "fpoly/gallery.hpp"
#include "fpoly/lp.hpp"
#include "fpoly/parameters.hpp"
#include "fpoly/polytope.hpp"
#include "oracles.hpp"

using namespace fpoly;

namespace {

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail << "first failure: " << what << "; ";
    passed = passed && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
  WeightedGraph graph;
  std::string label;
};

std::vector<Instance> unit_instances;      // criterion 5
std::vector<Instance> weighted_instances;  // criterion 6
std::size_t certificates_checked = 0;
std::size_t certificate_failures = 0;

void count_certificate(const lp::LinearProgram& program, const lp::Outcome& outcome) {
  ++certificates_checked;
  if (!lp::check_certificate(program, outcome)) ++certificate_failures;
}

// The fractional colouring LP assembled from the brute-force matching list.
lp::LinearProgram colouring_program(const WeightedGraph& g, LpMode mode) {
  const auto columns = mode == LpMode::kEqualityAll ? oracle::matchings(g)
                                                    : oracle::maximal_matchings(g);
  std::vector<std::uint64_t> used;
  for (auto m : columns) {
    if (m != 0) used.push_back(m);
  }
  lp::LinearProgram program;
  program.variable_count = used.size();
  program.objective.assign(used.size(), Rational(1));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    lp::Constraint row;
    row.relation = mode == LpMode::kEqualityAll ? lp::Relation::kEqual : lp::Relation::kGreaterEqual;
    row.rhs = 1;
    for (auto m : used) row.coefficients.push_back(Rational(static_cast<int>(m >> e & 1)));
    program.rows.push_back(std::move(row));
  }
  return program;
}

std::optional<Rational> certified_colouring_value(const WeightedGraph& g, LpMode mode) {
  if (g.edge_count() == 0) return Rational(0);
  const auto program = colouring_program(g, mode);
  const auto outcome = lp::solve(program);
  count_certificate(program, outcome);
  if (const auto* opt = std::get_if<lp::Optimal>(&outcome)) return opt->value;
  return std::nullopt;
}

VertexSet named(const WeightedGraph& g, std::initializer_list<std::string> names) {
  VertexSet out;
  for (const auto& n : names) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.name(v) == n) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightedGraph> gallery_graphs() {
  return {example1().graph,          example2(3).graph,          example2(5).graph,
          example2(7).graph,         c4_chord_graph(true),       c4_chord_graph(false),
          example3(1).graph,         example3(2).graph,          example3(3).graph};
}

Caps caps_for(const WeightedGraph& g) {
  Caps caps;
  caps.edges = std::max<std::size_t>(caps.edges, g.edge_count());
  return caps;
}

// ---------------------------------------------------------------------------

Verdict criterion1() {
  Verdict v;
  const auto start = Clock::now();
  const auto g = example1().graph;
  const EdgePoint x(std::vector<Rational>{2, 0});
  v.require(check_system(g, x, SystemVariant::kQOriginal).empty(), "Q_ORIGINAL violations");
  const auto verdict = membership(g, x);
  const auto* non = std::get_if<NonMember>(&verdict);
  v.require(non != nullptr, "membership returned Member");
  if (non) {
    v.require(separating_check(g, non->functional, x), "functional not verified");
    v.detail << "a = " << non->functional.coefficients.str() << ", a·x = "
             << to_string(non->functional.coefficients.dot(x)) << " > "
             << to_string(non->functional.bound) << "; ";
  }
  const double t = seconds_since(start);
  v.require(t < 1.0, "runtime");
  v.detail << t << " s";
  return v;
}

Verdict criterion2() {
  Verdict v;
  const auto start = Clock::now();
  for (std::uint64_t k : {3, 5, 7}) {
    const auto item = example2(k);
    const auto& g = item.graph;
    std::vector<Rational> values{1, 0};
    for (std::uint64_t i = 0; i < k; ++i) values.push_back(Rational(1, 2));
    const EdgePoint x(values);
    const std::string tag = "k=" + std::to_string(k) + ": ";
    v.require(check_system(g, x, SystemVariant::kQUnit).empty(), tag + "Q_UNIT violations");
    const auto verdict = membership(g, x);
    v.require(std::holds_alternative<NonMember>(verdict), tag + "membership returned Member");
    if (const auto* non = std::get_if<NonMember>(&verdict)) {
      v.require(separating_check(g, non->functional, x), tag + "functional not verified");
    }
    const VertexId u = named(g, {"u"})[0];
    const VertexId u_prime = named(g, {"u_prime"})[0];
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      Rational star = 0;
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.graph().edges()[e];
        if (edge.u == w || edge.v == w) star += x[e];
      }
      const Rational expected = w == u ? 2 : 1;
      v.require(star == expected, tag + "x(∂" + g.name(w) + ")");
    }
    v.require(u_prime != u, tag + "u' missing");
    std::size_t subsets = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
      std::uint64_t inside = 0;
      for (std::size_t e = 0; e < g.edge_count(); ++e) inside += oracle::ends_in(g, e, mask, 2);
      v.require(inside + 1 <= oracle::weight_sum(g, mask), tag + "|E[U]| <= f(U) - 1");
      ++subsets;
    }
    v.detail << tag << subsets << " non-empty U checked; ";
  }
  const double t = seconds_since(start);
  v.require(t < 10.0, "runtime");
  v.detail << t << " s";
  return v;
}

Verdict criterion3() {
  Verdict v;
  const auto start = Clock::now();
  bool found = false;
  for (bool chord_at_a : {true, false}) {
    const auto g = c4_chord_graph(chord_at_a);
    const auto w = find_witness(g, SystemVariant::kQUnit);
    v.detail << (chord_at_a ? "chord a-c: " : "chord b-d: ");
    if (!w) {
      v.detail << "no witness; ";
      continue;
    }
    const bool clean = check_system(g, *w, SystemVariant::kQUnit).empty();
    const bool outside = std::holds_alternative<NonMember>(membership(g, *w));
    v.detail << "x = " << w->str() << (clean && outside ? " verified; " : " NOT verified; ");
    found = found || (clean && outside);
  }
  v.require(found, "no verified witness for either chord");
  const double t = seconds_since(start);
  v.require(t < 10.0, "runtime");
  v.detail << t << " s";
  return v;
}

Verdict criterion4() {
  Verdict v;
  const auto start = Clock::now();
  for (std::uint64_t k : {1, 2, 3}) {
    const auto g = example3(k).graph;
    const std::string tag = "k=" + std::to_string(k) + ": ";
    const Rational half(2 * k + 1, 2);
    const Rational two_thirds(3 * k + 2, 3);
    const auto ds = delta_star(g);
    v.require(ds == half, tag + "Δ*_f");
    const VertexSet u = named(g, {"v1", "v2", "v3"});
    v.require(boundary(g.graph(), u).size() == 1, tag + "|∂U| = 1");
    v.require(gamma_objective(g, u, 1) == two_thirds, tag + "objective at U, |F| = 1");
    const auto gs = gamma_star(g);
    v.require(gs >= two_thirds, tag + "Γ*_f >= k + 2/3");
    const auto ws = density_star(g);
    v.require(ws <= ds, tag + "w*_f <= Δ*_f");
    const auto chi_star = frac_index_lp(g, LpMode::kCoverMaximal, g.edge_count()).value;
    v.require(chi_star > std::max(ds, ws), tag + "χ'*_f > max{Δ*_f, w*_f}");
    v.detail << tag << "Δ* = " << to_string(ds) << ", w* = " << to_string(ws)
             << ", Γ* = " << to_string(gs) << ", χ'* = " << to_string(chi_star) << "; ";
  }
  const double t = seconds_since(start);
  v.require(t < 60.0, "runtime");
  v.detail << t << " s";
  return v;
}

Verdict criterion5() {
  Verdict v;
  for (std::uint64_t seed = 1000; unit_instances.size() < 200; ++seed) {
    const auto g = random_weighted_graph(5, 8, 1, seed);
    if (g.edge_count() == 0) continue;
    unit_instances.push_back({g, "seed " + std::to_string(seed)});
  }
  for (const auto& [g, tag] : unit_instances) {
    const auto value = frac_index_lp(g).value;
    const auto formula = std::max(delta_star(g), density_star(g));
    const auto brute = std::max(oracle::delta_star(g), oracle::density_all_subgraphs(g));
    const auto certified = certified_colouring_value(g, LpMode::kCoverMaximal);
    v.require(formula == brute, tag + ": parameters disagree with brute force");
    v.require(certified && *certified == value, tag + ": independent LP disagrees");
    v.require(value == formula, tag + ": χ'* = " + to_string(value) + " vs " + to_string(formula));
  }
  v.detail << unit_instances.size() << " graphs with f = 1";
  return v;
}

Verdict criterion6() {
  Verdict v;
  std::size_t drawn = 0;
  for (std::uint64_t seed = 5000; weighted_instances.size() < 200; ++seed) {
    ++drawn;
    const auto g = random_weighted_graph(5, 8, 3, seed);
    if (delta_star(g) < 1) continue;
    weighted_instances.push_back({g, "seed " + std::to_string(seed)});
  }
  std::size_t strict = 0;
  for (const auto& [g, tag] : weighted_instances) {
    const auto value = frac_index_lp(g).value;
    const auto formula = frac_index_formula(g);
    const auto brute = std::max(oracle::delta_star(g), oracle::gamma_literal(g));
    const auto certified = certified_colouring_value(g, LpMode::kCoverMaximal);
    v.require(formula == brute, tag + ": parameters disagree with brute force");
    v.require(certified && *certified == value, tag + ": independent LP disagrees");
    v.require(value == formula, tag + ": χ'* = " + to_string(value) + " vs " + to_string(formula));
    if (gamma_star(g) > std::max(delta_star(g), density_star(g))) ++strict;
  }
  v.detail << weighted_instances.size() << " graphs with Δ*_f >= 1 (" << drawn
           << " drawn), Γ*_f > max{Δ*_f, w*_f} on " << strict;
  return v;
}

Verdict criterion7() {
  Verdict v;
  std::mt19937_64 rng(707);
  std::size_t pairs = 0, members = 0;
  for (std::uint64_t seed = 9000; pairs < 150; ++seed) {
    const auto g = random_weighted_graph(4, 6, seed % 3 == 0 ? 1 : 3, seed);
    if (g.edge_count() == 0) continue;
    const auto ms = oracle::matchings(g);
    for (int i = 0; i < 2; ++i) {
      std::vector<Rational> values(g.edge_count(), 0);
      if (i == 0) {
        std::uniform_int_distribution<int> den(1, 4);
        for (auto& x : values) {
          const int q = den(rng);
          x = Rational(std::uniform_int_distribution<int>(0, q)(rng), q);
          x.canonicalize();
        }
      } else {
        const int parts = 1 + static_cast<int>(rng() % 3);
        for (int p = 0; p < parts; ++p) {
          const auto m = ms[rng() % ms.size()];
          for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (m >> e & 1) values[e] += Rational(1, parts);
          }
        }
      }
      const EdgePoint x(values);
      const auto verdict = membership(g, x);
      const bool in = std::holds_alternative<Member>(verdict);
      const bool clean = check_system(g, x, SystemVariant::kEdmondsF).empty();
      v.require(in == clean, "seed " + std::to_string(seed) + ", x = " + x.str());
      if (in) {
        v.require(convex_weights_check(g, std::get<Member>(verdict), x), "convex weights");
      } else {
        v.require(separating_check(g, std::get<NonMember>(verdict).functional, x), "functional");
      }
      members += in;
      ++pairs;
    }
  }
  v.detail << pairs << " pairs, " << members << " members, " << pairs - members << " non-members";
  return v;
}

Verdict criterion8() {
  Verdict v;
  std::size_t checked = 0;
  auto check = [&](const WeightedGraph& g, const std::string& tag) {
    const auto r = parameter_report(g);
    const auto lhs = std::max(r.delta + 1, r.gamma);
    const auto rhs = std::max(r.delta + 1, r.density);
    v.require(lhs == rhs, tag);
    ++checked;
  };
  for (const auto& [g, tag] : unit_instances) check(g, tag);
  for (const auto& [g, tag] : weighted_instances) check(g, tag);
  for (const auto& g : gallery_graphs()) check(g, "gallery");
  v.detail << checked << " graphs, zero exceptions required";
  return v;
}

Verdict criterion9() {
  Verdict v;
  std::size_t checked = 0, ceil_checked = 0;
  auto check = [&](const WeightedGraph& g, const std::string& tag) {
    const auto r = bounds_report(g, caps_for(g));
    const auto& p = r.parameters;
    v.require(partition_check(g, exact_index(g, caps_for(g)).classes), tag + ": partition");
    // Recomputed here from the raw numbers.
    const Rational chi(static_cast<unsigned long>(r.chi));
    const auto ceil_star = oracle::ceil_of(r.chi_star);
    v.require(r.chi >= std::max(p.delta, p.density), tag + ": lower bound");
    Rational nns = Rational(9, 8) * static_cast<unsigned long>(p.delta) + Rational(3, 4);
    if (nns < static_cast<unsigned long>(p.density)) nns = static_cast<unsigned long>(p.density);
    v.require(chi <= nns, tag + ": NNS bound");
    v.require(r.chi <= std::max(p.delta + 1, p.density), tag + ": conjectured bound");
    v.require(ceil_star <= r.chi && r.chi <= ceil_star + 1, tag + ": sandwich");
    v.require(r.chi_star <= chi, tag + ": fractional lower bound");
    if (p.delta_star >= 1) {
      v.require(ceil_star == std::max(p.delta, p.gamma), tag + ": ceiling identity");
      ++ceil_checked;
    }
    ++checked;
  };
  for (const auto& [g, tag] : unit_instances) check(g, tag);
  for (const auto& [g, tag] : weighted_instances) check(g, tag);
  for (const auto& g : gallery_graphs()) check(g, "gallery");

  std::size_t brute = 0;
  for (std::uint64_t seed = 20000; brute < 150; ++seed) {
    const auto g = random_weighted_graph(5, 6, 3, seed);
    const auto r = exact_index(g);
    v.require(r.index == oracle::index_by_partitions(g), "seed " + std::to_string(seed) + ": χ'_f");
    ++brute;
  }
  for (const auto& [g, tag] : unit_instances) {
    if (g.edge_count() > 6) continue;
    v.require(exact_index(g).index == oracle::index_by_partitions(g), tag + ": χ'_f");
    ++brute;
  }
  v.detail << checked << " graphs (ceiling identity on " << ceil_checked << "), " << brute
           << " partition brute-force comparisons";
  return v;
}

Verdict criterion10() {
  Verdict v;
  std::size_t checked = 0;
  auto check = [&](const WeightedGraph& g, const std::string& tag) {
    const auto eq = frac_index_lp(g, LpMode::kEqualityAll).value;
    const auto cover = frac_index_lp(g, LpMode::kCoverMaximal).value;
    v.require(eq == cover, tag + ": " + to_string(eq) + " vs " + to_string(cover));
    const auto independent = certified_colouring_value(g, LpMode::kEqualityAll);
    v.require(independent && *independent == eq, tag + ": independent equality LP");
    ++checked;
  };
  for (const auto& [g, tag] : unit_instances) check(g, tag);
  for (const auto& [g, tag] : weighted_instances) check(g, tag);
  v.detail << checked << " graphs";
  return v;
}

lp::LinearProgram beale() {
  lp::LinearProgram program;
  program.variable_count = 4;
  program.objective = {Rational(-3, 4), 20, Rational(-1, 2), 6};
  program.rows = {
      {{Rational(1, 4), -8, -1, 9}, lp::Relation::kLessEqual, 0},
      {{Rational(1, 2), -12, Rational(-1, 2), 3}, lp::Relation::kLessEqual, 0},
      {{0, 0, 1, 0}, lp::Relation::kLessEqual, 1},
  };
  return program;
}

Verdict criterion11() {
  Verdict v;
  std::size_t kinds[3] = {0, 0, 0};
  std::mt19937_64 rng(1111);
  std::uniform_int_distribution<int> coef(-5, 5), rel(0, 2), dim(1, 5), den(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    lp::LinearProgram program;
    program.variable_count = static_cast<std::size_t>(dim(rng));
    program.sense = rng() % 2 ? lp::Sense::kMaximize : lp::Sense::kMinimize;
    for (std::size_t j = 0; j < program.variable_count; ++j) {
      program.objective.push_back(coef(rng));
      if (rng() % 4 == 0) {
        program.lower_bounds.resize(program.variable_count, Rational(0));
        program.lower_bounds[j] = rng() % 2 ? std::optional<Rational>() : Rational(coef(rng));
      }
    }
    if (!program.lower_bounds.empty()) program.lower_bounds.resize(program.variable_count, Rational(0));
    const int rows = dim(rng);
    for (int i = 0; i < rows; ++i) {
      lp::Constraint row;
      for (std::size_t j = 0; j < program.variable_count; ++j) {
        Rational a(coef(rng), den(rng));
        a.canonicalize();
        row.coefficients.push_back(a);
      }
      row.relation = static_cast<lp::Relation>(rel(rng));
      row.rhs = coef(rng);
      program.rows.push_back(std::move(row));
    }
    const auto outcome = lp::solve(program);
    count_certificate(program, outcome);
    ++kinds[outcome.index()];
  }
  lp::SolveStats stats;
  const auto program = beale();
  const auto outcome = lp::solve(program, &stats);
  count_certificate(program, outcome);
  const auto* opt = std::get_if<lp::Optimal>(&outcome);
  v.require(opt && opt->value == Rational(-5, 4), "degenerate fixture optimum");
  v.require(certificate_failures == 0, std::to_string(certificate_failures) + " certificates rejected");
  v.require(kinds[0] > 0 && kinds[1] > 0 && kinds[2] > 0, "outcome kinds not all exercised");
  v.detail << certificates_checked << " outcomes certified (random: " << kinds[0] << " optimal, "
           << kinds[1] << " infeasible, " << kinds[2] << " unbounded); degenerate fixture "
           << (opt ? to_string(opt->value) : "?") << " after " << stats.phase1_pivots + stats.phase2_pivots
           << " pivots";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"example1: Q_ORIGINAL clean, separated from P_f", criterion1},
      {"example2 (k = 3, 5, 7): Q_UNIT clean, outside P_f, structure", criterion2},
      {"C4 with chord: Q_UNIT witness outside P_f", criterion3},
      {"example3 (k = 1, 2, 3): parameters and χ'*_f gap", criterion4},
      {"f = 1: χ'*_f = max{Δ*, w*}", criterion5},
      {"Δ*_f >= 1: χ'*_f = max{Δ*_f, Γ*_f}", criterion6},
      {"membership matches the (a)-(c) system", criterion7},
      {"max{Δf+1, Γf} = max{Δf+1, wf}", criterion8},
      {"index bound suite", criterion9},
      {"equality and cover LPs agree", criterion10},
      {"LP certificates and anti-cycling", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.passed = false;
      v.detail << "exception: " << e.what();
    }
    failed += !v.passed;
    std::cout << "criterion " << i + 1 << ": " << (v.passed ? "PASS" : "FAIL") << "  "
              << criteria[i].first << "  [" << v.detail.str() << "] (" << seconds_since(start)
              << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
