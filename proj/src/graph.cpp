#include "fpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fpoly/error.hpp"

namespace fpoly {
namespace {

void check_vertex(const Multigraph& g, VertexId v) {
  if (v >= g.vertex_count()) {
    throw std::out_of_range("vertex id " + std::to_string(v) + " out of range (graph has " +
                            std::to_string(g.vertex_count()) + " vertices)");
  }
}

std::vector<bool> membership(const Multigraph& g, std::span<const VertexId> vertices) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : vertices) {
    check_vertex(g, v);
    in[v] = true;
  }
  return in;
}

void check_mask(const Multigraph& g, VertexMask mask) {
  if (g.vertex_count() > kMaxMaskBits) {
    throw CapExceeded("vertex count for mask operations", g.vertex_count(), kMaxMaskBits);
  }
  if (g.vertex_count() < 64 && (mask >> g.vertex_count()) != 0) {
    throw std::out_of_range("vertex mask references vertices beyond the graph");
  }
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::uint64_t parse_positive(std::string_view word, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line, std::string(what) + " '" + std::string(word) +
                               "' is not a non-negative integer");
  }
  if (value == 0) throw ParseError(line, std::string(what) + " must be positive");
  return value;
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incidence_(vertex_count) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.u >= vertex_count_ || edge.v >= vertex_count_) {
      throw std::out_of_range("edge " + std::to_string(e) + " references a missing vertex");
    }
    if (edge.u == edge.v) {
      throw std::invalid_argument("edge " + std::to_string(e) + " is a loop");
    }
    incidence_[edge.u].push_back(e);
    incidence_[edge.v].push_back(e);
  }
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
  return edges_[e];
}

std::span<const EdgeId> Multigraph::incident(VertexId v) const {
  check_vertex(*this, v);
  return incidence_[v];
}

bool Multigraph::is_simple() const {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

WeightedGraph::WeightedGraph(Multigraph graph, std::vector<std::uint32_t> weights,
                             std::vector<std::string> names)
    : graph_(std::move(graph)), weights_(std::move(weights)), names_(std::move(names)) {
  if (weights_.size() != graph_.vertex_count()) {
    throw std::invalid_argument("vertex function must assign a weight to every vertex");
  }
  for (VertexId v = 0; v < weights_.size(); ++v) {
    if (weights_[v] == 0) {
      throw std::invalid_argument("weight of vertex " + std::to_string(v) + " must be positive");
    }
  }
  if (names_.empty()) {
    for (VertexId v = 0; v < graph_.vertex_count(); ++v) names_.push_back("v" + std::to_string(v));
  }
  if (names_.size() != graph_.vertex_count()) {
    throw std::invalid_argument("one name per vertex required");
  }
}

std::uint32_t WeightedGraph::f(VertexId v) const {
  check_vertex(graph_, v);
  return weights_[v];
}

const std::string& WeightedGraph::name(VertexId v) const {
  check_vertex(graph_, v);
  return names_[v];
}

bool WeightedGraph::is_unit_weighted() const {
  return std::all_of(weights_.begin(), weights_.end(), [](std::uint32_t w) { return w == 1; });
}

WeightedGraph parse_graph(std::string_view text) {
  std::map<std::string, VertexId, std::less<>> ids;
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (words[0] == "vertex") {
      if (words.size() != 3) throw ParseError(line_no, "expected 'vertex <name> <f-weight>'");
      if (!edges.empty()) throw ParseError(line_no, "vertices must be declared before edges");
      std::string name(words[1]);
      if (ids.contains(name)) throw ParseError(line_no, "duplicate vertex '" + name + "'");
      const std::uint64_t w = parse_positive(words[2], line_no, "f-weight");
      if (w > UINT32_MAX) throw ParseError(line_no, "f-weight too large");
      ids.emplace(name, names.size());
      names.push_back(std::move(name));
      weights.push_back(static_cast<std::uint32_t>(w));
    } else if (words[0] == "edge") {
      if (words.size() != 3 && words.size() != 4) {
        throw ParseError(line_no, "expected 'edge <name1> <name2> [multiplicity]'");
      }
      const auto a = ids.find(words[1]);
      const auto b = ids.find(words[2]);
      if (a == ids.end()) throw ParseError(line_no, "unknown vertex '" + std::string(words[1]) + "'");
      if (b == ids.end()) throw ParseError(line_no, "unknown vertex '" + std::string(words[2]) + "'");
      if (a->second == b->second) {
        throw ParseError(line_no, "loop at vertex '" + std::string(words[1]) + "' is not allowed");
      }
      const std::uint64_t count =
          words.size() == 4 ? parse_positive(words[3], line_no, "multiplicity") : 1;
      for (std::uint64_t i = 0; i < count; ++i) edges.push_back({a->second, b->second});
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(words[0]) + "'");
    }
  }
  if (names.empty()) throw ParseError(line_no, "graph must have at least one vertex");
  Multigraph g(names.size(), std::move(edges));
  return WeightedGraph(std::move(g), std::move(weights), std::move(names));
}

std::string serialize_graph(const WeightedGraph& g) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "vertex " << g.name(v) << ' ' << g.f(v) << '\n';
  }
  const auto edges = g.graph().edges();
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i + 1;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    out << "edge " << g.name(edges[i].u) << ' ' << g.name(edges[i].v);
    if (j - i > 1) out << ' ' << (j - i);
    out << '\n';
    i = j;
  }
  return out.str();
}

EdgeSet induced_edges(const Multigraph& g, std::span<const VertexId> vertices) {
  const auto in = membership(g, vertices);
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in[g.edges()[e].u] && in[g.edges()[e].v]) out.push_back(e);
  }
  return out;
}

EdgeSet boundary(const Multigraph& g, std::span<const VertexId> vertices) {
  const auto in = membership(g, vertices);
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in[g.edges()[e].u] != in[g.edges()[e].v]) out.push_back(e);
  }
  return out;
}

EdgeSet cut_edges(const Multigraph& g, std::span<const VertexId> x, std::span<const VertexId> y) {
  const auto in_x = membership(g, x);
  const auto in_y = membership(g, y);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_x[v] && in_y[v]) {
      throw std::invalid_argument("cut_edges: vertex " + std::to_string(v) + " lies in both sets");
    }
  }
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    if ((in_x[edge.u] && in_y[edge.v]) || (in_y[edge.u] && in_x[edge.v])) out.push_back(e);
  }
  return out;
}

std::size_t degree(const Multigraph& g, VertexId v) { return g.incident(v).size(); }

std::uint64_t f_sum(const WeightedGraph& g, std::span<const VertexId> vertices) {
  const auto in = membership(g.graph(), vertices);
  std::uint64_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) total += g.f(v);
  }
  return total;
}

VertexMask to_mask(const Multigraph& g, std::span<const VertexId> vertices) {
  check_mask(g, 0);
  VertexMask mask = 0;
  for (VertexId v : vertices) {
    check_vertex(g, v);
    mask |= VertexMask{1} << v;
  }
  return mask;
}

VertexSet from_mask(VertexMask mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

EdgeSet induced_edges(const Multigraph& g, VertexMask mask) {
  check_mask(g, mask);
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    if ((mask >> edge.u & 1) && (mask >> edge.v & 1)) out.push_back(e);
  }
  return out;
}

EdgeSet boundary(const Multigraph& g, VertexMask mask) {
  check_mask(g, mask);
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges()[e];
    if ((mask >> edge.u & 1) != (mask >> edge.v & 1)) out.push_back(e);
  }
  return out;
}

std::uint64_t f_sum(const WeightedGraph& g, VertexMask mask) {
  check_mask(g.graph(), mask);
  std::uint64_t total = 0;
  for (VertexId v : from_mask(mask)) total += g.f(v);
  return total;
}

bool lex_less(VertexMask a, VertexMask b) {
  const VertexMask diff = a ^ b;
  if (diff == 0) return false;
  const int bit = std::countr_zero(diff);
  const VertexMask above = bit == 63 ? 0 : ~((VertexMask{2} << bit) - 1);
  // The lists agree below `bit`. The one holding `bit` is smaller unless the
  // other one has run out of elements.
  if (a >> bit & 1) return (b & above) != 0;
  return (a & above) == 0;
}

}  // namespace fpoly
