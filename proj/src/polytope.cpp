#include "fpoly/polytope.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fpoly/lp.hpp"

namespace fpoly {
namespace {

// Collects violations and supports the stop-at-first mode.
class Collector {
 public:
  explicit Collector(bool first_only) : first_only_(first_only) {}

  bool done() const { return first_only_ && !out_.empty(); }

  void check(ViolationKind kind, VertexSet vertices, EdgeSet edges, const Rational& lhs,
             const Rational& rhs) {
    if (done() || lhs <= rhs) return;
    out_.push_back({kind, std::move(vertices), std::move(edges), lhs, rhs});
  }

  std::vector<ConstraintViolation> finish() {
    std::sort(out_.begin(), out_.end(), [](const auto& a, const auto& b) {
      if (a.kind != b.kind) return a.kind < b.kind;
      if (a.vertices != b.vertices) return a.vertices < b.vertices;
      return a.edges < b.edges;
    });
    return std::move(out_);
  }

 private:
  bool first_only_;
  std::vector<ConstraintViolation> out_;
};

void lower_bounds(const EdgePoint& x, ViolationKind kind, Collector& c) {
  for (EdgeId e = 0; e < x.size(); ++e) c.check(kind, {}, {e}, -x[e], Rational(0));
}

void upper_bounds(const EdgePoint& x, ViolationKind kind, Collector& c) {
  for (EdgeId e = 0; e < x.size(); ++e) c.check(kind, {}, {e}, x[e], Rational(1));
}

void vertex_caps(const WeightedGraph& g, const EdgePoint& x, ViolationKind kind, bool unit,
                 Collector& c) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto edges = g.graph().incident(v);
    c.check(kind, {v}, {}, x.sum(edges), Rational(unit ? 1 : g.f(v)));
  }
}

// x(E[U]) <= floor(f(U)/2), or floor(|U|/2) in the unit form.
void induced_caps(const WeightedGraph& g, const EdgePoint& x, ViolationKind kind, bool unit,
                  const CheckOptions& options, Collector& c) {
  check_cap("vertex count for subset enumeration", g.vertex_count(), options.vertex_cap);
  const VertexMask limit = VertexMask{1} << g.vertex_count();
  for (VertexMask u = 1; u < limit && !c.done(); ++u) {
    const auto inside = induced_edges(g.graph(), u);
    const std::uint64_t weight = unit ? std::popcount(u) : f_sum(g, u);
    c.check(kind, from_mask(u), {}, x.sum(inside), Rational(static_cast<unsigned long>(weight / 2)));
  }
}

// (c): every U and every F ⊆ ∂U, literally.
void blossom_caps(const WeightedGraph& g, const EdgePoint& x, const CheckOptions& options,
                  Collector& c) {
  check_cap("vertex count for subset enumeration", g.vertex_count(), options.vertex_cap);
  const VertexMask limit = VertexMask{1} << g.vertex_count();
  for (VertexMask u = 0; u < limit && !c.done(); ++u) {
    const auto inside = induced_edges(g.graph(), u);
    const auto leaving = boundary(g.graph(), u);
    check_cap("boundary size for the (c) scan", leaving.size(), options.boundary_cap);
    const Rational base = x.sum(inside);
    const std::uint64_t weight = f_sum(g, u);
    const std::uint64_t subsets = std::uint64_t{1} << leaving.size();
    for (std::uint64_t bits = 0; bits < subsets && !c.done(); ++bits) {
      Rational lhs = base;
      EdgeSet f_edges;
      for (std::size_t i = 0; i < leaving.size(); ++i) {
        if (bits >> i & 1) {
          lhs += x[leaving[i]];
          f_edges.push_back(leaving[i]);
        }
      }
      const std::uint64_t bound = (weight + f_edges.size()) / 2;
      if (lhs > bound) {
        std::sort(f_edges.begin(), f_edges.end());
        c.check(ViolationKind::kBlossomF, from_mask(u), std::move(f_edges), lhs,
                Rational(static_cast<unsigned long>(bound)));
      }
    }
  }
}

}  // namespace

std::string label(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNonNegative: return "(i)";
    case ViolationKind::kVertexCap: return "(ii)";
    case ViolationKind::kInducedCap: return "(iii)";
    case ViolationKind::kUnitBound: return "unit";
    case ViolationKind::kEdgeLower: return "(a)-lower";
    case ViolationKind::kEdgeUpper: return "(a)-upper";
    case ViolationKind::kVertexCapF: return "(b)";
    case ViolationKind::kBlossomF: return "(c)";
    case ViolationKind::kNonNegative1: return "(1)";
    case ViolationKind::kVertexCap1: return "(2)";
    case ViolationKind::kOddSet1: return "(3)";
  }
  return "?";
}

std::string label(SystemVariant variant) {
  switch (variant) {
    case SystemVariant::kQOriginal: return "q";
    case SystemVariant::kQUnit: return "q-unit";
    case SystemVariant::kEdmondsF: return "edmonds-f";
    case SystemVariant::kEdmonds1: return "edmonds-1";
  }
  return "?";
}

SystemVariant parse_variant(std::string_view text) {
  if (text == "q") return SystemVariant::kQOriginal;
  if (text == "q-unit") return SystemVariant::kQUnit;
  if (text == "edmonds-f") return SystemVariant::kEdmondsF;
  if (text == "edmonds-1") return SystemVariant::kEdmonds1;
  throw std::invalid_argument("unknown system variant '" + std::string(text) +
                              "' (expected q, q-unit, edmonds-f or edmonds-1)");
}

std::vector<ConstraintViolation> check_system(const WeightedGraph& g, const EdgePoint& x,
                                              SystemVariant variant,
                                              const CheckOptions& options) {
  if (x.size() != g.edge_count()) {
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates for " +
                                std::to_string(g.edge_count()) + " edges");
  }
  Collector c(options.first_only);
  switch (variant) {
    case SystemVariant::kQOriginal:
    case SystemVariant::kQUnit:
      lower_bounds(x, ViolationKind::kNonNegative, c);
      vertex_caps(g, x, ViolationKind::kVertexCap, false, c);
      induced_caps(g, x, ViolationKind::kInducedCap, false, options, c);
      if (variant == SystemVariant::kQUnit) upper_bounds(x, ViolationKind::kUnitBound, c);
      break;
    case SystemVariant::kEdmondsF:
      lower_bounds(x, ViolationKind::kEdgeLower, c);
      upper_bounds(x, ViolationKind::kEdgeUpper, c);
      vertex_caps(g, x, ViolationKind::kVertexCapF, false, c);
      blossom_caps(g, x, options, c);
      break;
    case SystemVariant::kEdmonds1:
      if (!g.is_unit_weighted()) {
        throw PreconditionError("the edmonds-1 system applies only when f(v) = 1 for every vertex");
      }
      lower_bounds(x, ViolationKind::kNonNegative1, c);
      vertex_caps(g, x, ViolationKind::kVertexCap1, true, c);
      induced_caps(g, x, ViolationKind::kOddSet1, true, options, c);
      break;
  }
  return c.finish();
}

MembershipVerdict membership(const WeightedGraph& g, const EdgePoint& x, std::size_t edge_cap) {
  if (x.size() != g.edge_count()) {
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates for " +
                                std::to_string(g.edge_count()) + " edges");
  }
  const auto matchings = enumerate_all(g, edge_cap);
  const std::size_t m = g.edge_count();

  lp::LinearProgram program;
  program.variable_count = matchings.size();
  program.objective.assign(matchings.size(), Rational(0));
  for (EdgeId e = 0; e < m; ++e) {
    lp::Constraint row{std::vector<Rational>(matchings.size()), lp::Relation::kEqual, x[e]};
    for (std::size_t j = 0; j < matchings.size(); ++j) {
      if (matchings[j].contains(e)) row.coefficients[j] = 1;
    }
    program.rows.push_back(std::move(row));
  }
  program.rows.push_back(
      {std::vector<Rational>(matchings.size(), Rational(1)), lp::Relation::kEqual, Rational(1)});

  const auto outcome = lp::solve(program);
  if (const auto* opt = std::get_if<lp::Optimal>(&outcome)) {
    Member member;
    for (std::size_t j = 0; j < matchings.size(); ++j) {
      if (opt->point[j] != 0) member.weights.emplace_back(matchings[j], opt->point[j]);
    }
    if (!convex_weights_check(g, member, x)) {
      throw std::logic_error("membership: convex weights failed re-verification");
    }
    return member;
  }
  const auto* inf = std::get_if<lp::Infeasible>(&outcome);
  if (inf == nullptr) throw std::logic_error("membership: feasibility LP reported unbounded");
  // Σ_{e∈M} y_e + y_sum <= 0 for every M, while Σ y_e x_e + y_sum > 0.
  NonMember verdict;
  verdict.functional.coefficients = EdgePoint(std::vector<Rational>(inf->farkas.begin(),
                                                                    inf->farkas.begin() + m));
  verdict.functional.bound = -inf->farkas[m];
  if (!separating_check(g, verdict.functional, x, edge_cap)) {
    throw std::logic_error("membership: separating functional failed re-verification");
  }
  return verdict;
}

bool separating_check(const WeightedGraph& g, const SeparatingFunctional& functional,
                      const EdgePoint& x, std::size_t edge_cap) {
  if (functional.coefficients.size() != g.edge_count() || x.size() != g.edge_count()) {
    return false;
  }
  for (const auto& m : enumerate_all(g, edge_cap)) {
    if (functional.coefficients.sum(m.edges()) > functional.bound) return false;
  }
  return functional.coefficients.dot(x) > functional.bound;
}

bool convex_weights_check(const WeightedGraph& g, const Member& member, const EdgePoint& x) {
  if (x.size() != g.edge_count()) return false;
  EdgePoint total(g.edge_count());
  Rational mass = 0;
  for (const auto& [m, w] : member.weights) {
    if (w <= 0 || !is_f_matching(g, m)) return false;
    mass += w;
    for (EdgeId e : m.edges()) total[e] += w;
  }
  return mass == 1 && total == x;
}

PointFile parse_point(std::string_view text, std::size_t edge_count) {
  std::vector<std::optional<Rational>> values(edge_count);
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto newline = text.find('\n');
    std::string line(text.substr(0, newline));
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string id_text, value_text, extra;
    if (!(words >> id_text)) continue;
    if (!(words >> value_text) || (words >> extra)) {
      throw ParseError(line_no, "expected '<edge-id> <value>'");
    }
    std::size_t id = 0;
    const auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
    if (ec != std::errc{} || ptr != id_text.data() + id_text.size()) {
      throw ParseError(line_no, "edge id '" + id_text + "' is not a non-negative integer");
    }
    if (id >= edge_count) {
      throw ParseError(line_no, "edge id " + id_text + " out of range (graph has " +
                                    std::to_string(edge_count) + " edges)");
    }
    if (values[id]) throw ParseError(line_no, "edge " + id_text + " given twice");
    try {
      values[id] = parse_rational(value_text);
    } catch (const std::invalid_argument& err) {
      throw ParseError(line_no, err.what());
    }
  }
  PointFile out{EdgePoint(edge_count), {}};
  for (EdgeId e = 0; e < edge_count; ++e) {
    if (values[e]) {
      out.point[e] = *values[e];
    } else {
      out.warnings.push_back("edge " + std::to_string(e) + " missing from point file; using 0");
    }
  }
  return out;
}

std::string serialize_point(const EdgePoint& x) {
  std::string out;
  for (EdgeId e = 0; e < x.size(); ++e) {
    out += std::to_string(e) + ' ' + to_string(x[e]) + '\n';
  }
  return out;
}

}  // namespace fpoly
