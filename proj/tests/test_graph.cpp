#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <random>
#include <set>

#include "fpoly/error.hpp"
#include "fpoly/gallery.hpp"
#include "fpoly/graph.hpp"
#include "oracles.hpp"

using namespace fpoly;

namespace {

const char* kDoubledEdge = "vertex a 2\nvertex b 2\nedge a b 2\n";

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

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0/5")) == "0");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK(to_decimal_string(Rational(5, 3)) == "1.6667");
  CHECK(to_decimal_string(Rational(-1, 8), 2) == "-0.13");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("rational ceilings") {
  CHECK(ceil(Rational(5, 3)) == 2);
  CHECK(ceil(Rational(-5, 3)) == -1);
  CHECK(floor(Rational(-5, 3)) == -2);
  CHECK(ceil_natural(Rational(6, 3)) == 2);
  CHECK(ceil_natural(Rational(0)) == 0);
}

TEST_CASE("parse_graph") {
  SUBCASE("the two-vertex graph with a doubled edge") {
    const auto g = parse_graph(kDoubledEdge);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.f(0) == 2);
    CHECK(g.f(1) == 2);
    CHECK(g.graph().edge(0) == Edge{0, 1});
    CHECK(g.graph().edge(1) == Edge{0, 1});
    CHECK_FALSE(g.graph().is_simple());
  }
  SUBCASE("comments and blank lines") {
    const auto g = parse_graph("# head\n\nvertex x 1   # tail\nvertex y 3\nedge y x\n");
    CHECK(g.edge_count() == 1);
    CHECK(g.name(1) == "y");
    CHECK(g.f(1) == 3);
  }
  SUBCASE("no vertices") {
    CHECK_THROWS_WITH_AS(parse_graph("# nothing\n"), doctest::Contains("at least one vertex"),
                         ParseError);
  }
  SUBCASE("loop") {
    CHECK_THROWS_WITH_AS(parse_graph("vertex a 1\nedge a a\n"), doctest::Contains("loop"),
                         ParseError);
  }
  SUBCASE("errors carry the line number") {
    try {
      parse_graph("vertex a 1\nvertex b 1\nedge a c\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph("vertex a 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex a -2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex a 1\nvertex a 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex a 1\nvertex b 1\nedge a b 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex a 1\nvertex b 1\nedge a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex a 1\nvertex b 1\nedge a b 2 9\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex a one\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("node a 1\n"), ParseError);
  }
  SUBCASE("constructor invariants") {
    CHECK_THROWS(Multigraph(2, {{0, 0}}));
    CHECK_THROWS(Multigraph(2, {{0, 2}}));
    CHECK_THROWS(WeightedGraph(Multigraph(1, {}), {0}));
    CHECK_THROWS(WeightedGraph(Multigraph(2, {}), {1}));
  }
}

TEST_CASE("serialize then parse is the identity") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_weighted_graph(6, 10, 4, seed);
    const auto text = serialize_graph(g);
    const auto back = parse_graph(text);
    CHECK(back == g);
    CHECK(serialize_graph(back) == text);
  }
  CHECK(serialize_graph(parse_graph(kDoubledEdge)) == kDoubledEdge);
}

TEST_CASE("induced_edges") {
  const auto g1 = parse_graph(kDoubledEdge);
  CHECK(induced_edges(g1.graph(), VertexSet{0, 1}) == EdgeSet{0, 1});
  CHECK(induced_edges(g1.graph(), VertexSet{}).empty());
  const auto g2 = example2(3).graph;
  CHECK(induced_edges(g2.graph(), named(g2, {"u", "c1", "c2"})) == EdgeSet{2, 3, 4});
  CHECK_THROWS_AS(induced_edges(g1.graph(), VertexSet{0, 5}), std::out_of_range);
}

TEST_CASE("boundary") {
  const auto g2 = example2(3).graph;
  CHECK(boundary(g2.graph(), named(g2, {"u"})) == EdgeSet{0, 1, 2, 4});
  CHECK(boundary(g2.graph(), VertexSet{0, 1, 2, 3}).empty());
  const auto g3 = example3(1).graph;
  CHECK(boundary(g3.graph(), named(g3, {"v1", "v2", "v3"})) == EdgeSet{0});
  CHECK_THROWS_AS(boundary(g3.graph(), VertexSet{6}), std::out_of_range);
}

TEST_CASE("cut_edges") {
  const auto g3 = example3(2).graph;
  CHECK(cut_edges(g3.graph(), named(g3, {"v1"}), named(g3, {"v2"})).size() == 2);
  CHECK(cut_edges(g3.graph(), VertexSet{}, VertexSet{1, 2}).empty());
  const auto g1 = parse_graph(kDoubledEdge);
  CHECK(cut_edges(g1.graph(), VertexSet{0}, VertexSet{1}) == EdgeSet{0, 1});
  CHECK_THROWS_AS(cut_edges(g1.graph(), VertexSet{0}, VertexSet{0, 1}), std::invalid_argument);
}

TEST_CASE("degree and f_sum") {
  for (std::uint64_t k = 1; k <= 3; ++k) {
    const auto g3 = example3(k).graph;
    for (VertexId v = 0; v < 6; ++v) CHECK(degree(g3.graph(), v) == 2 * k + 1);
    CHECK(f_sum(g3, named(g3, {"v1", "v2", "v3"})) == 6);
  }
  const auto isolated = parse_graph("vertex a 1\nvertex b 1\nvertex c 1\nedge a b\n");
  CHECK(degree(isolated.graph(), 2) == 0);
  CHECK_THROWS_AS(degree(isolated.graph(), 3), std::out_of_range);
  CHECK(f_sum(isolated, VertexSet{}) == 0);

  for (std::uint64_t k : {3, 5, 7}) {
    const auto g2 = example2(k).graph;
    CHECK(degree(g2.graph(), 0) == 4);
    // u, u' and the first r cycle vertices after u
    for (std::size_t r = 0; r + 1 < k; ++r) {
      VertexSet u{0, k};
      for (std::size_t i = 1; i <= r; ++i) u.push_back(i);
      std::sort(u.begin(), u.end());
      CHECK(f_sum(g2, u) == r + 4);
    }
  }
}

TEST_CASE("handshake and boundary partition") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_weighted_graph(6, 10, 3, seed);
    const auto n = g.vertex_count();
    for (VertexMask u = 0; u < (VertexMask{1} << n); ++u) {
      const auto vs = from_mask(u);
      CHECK(to_mask(g.graph(), vs) == u);
      const auto inside = induced_edges(g.graph(), vs);
      const auto bd = boundary(g.graph(), vs);
      CHECK(inside == induced_edges(g.graph(), u));
      CHECK(bd == boundary(g.graph(), u));
      std::size_t degree_sum = 0;
      std::set<EdgeId> touching;
      for (VertexId v : vs) {
        degree_sum += degree(g.graph(), v);
        for (EdgeId e : g.graph().incident(v)) touching.insert(e);
      }
      CHECK(2 * inside.size() + bd.size() == degree_sum);
      std::vector<EdgeId> merged;
      std::set_union(inside.begin(), inside.end(), bd.begin(), bd.end(),
                     std::back_inserter(merged));
      CHECK(merged.size() == inside.size() + bd.size());
      CHECK(merged == std::vector<EdgeId>(touching.begin(), touching.end()));
      CHECK(f_sum(g, vs) == oracle::weight_sum(g, u));
    }
    for (VertexId v = 0; v < n; ++v) {
      CHECK(degree(g.graph(), v) == boundary(g.graph(), VertexSet{v}).size());
    }
  }
}

TEST_CASE("lex_less compares sorted id lists") {
  CHECK(lex_less(0b011, 0b101));   // {0,1} < {0,2}
  CHECK(lex_less(0b001, 0b011));   // {0} < {0,1}
  CHECK(lex_less(0b110, 0b100));   // {1,2} < {2}
  CHECK_FALSE(lex_less(0b101, 0b101));
  CHECK(lex_less(0, 0b1));
}

TEST_CASE("cap guard") {
  CHECK_NOTHROW(check_cap("edges", 20, 20));
  CHECK_THROWS_AS(check_cap("edges", 21, 20), CapExceeded);
  CHECK_THROWS_AS(check_cap("edges", 1, 64), CapExceeded);
  try {
    check_cap("edges", 25, 20);
  } catch (const CapExceeded& e) {
    CHECK(e.required() == 25);
    CHECK(std::string(e.what()).find("25") != std::string::npos);
  }
}
