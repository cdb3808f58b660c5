#include <doctest.h>

#include "fpoly/chromatic.hpp"
#include "fpoly/error.hpp"
#include "fpoly/gallery.hpp"
#include "fpoly/parameters.hpp"
#include "oracles.hpp"

using namespace fpoly;

TEST_CASE("gallery items verify") {
  for (const auto& item : {example1(), example2(3), example2(5), example2(7), c4_chord(),
                           example3(1), example3(2)}) {
    CAPTURE(item.name);
    const auto results = verify(item);
    CHECK(results.size() == item.claims.size());
    for (const auto& r : results) {
      CAPTURE(r.description);
      CAPTURE(r.detail);
      CHECK(r.passed);
    }
    CHECK(all_passed(results));
  }
}

TEST_CASE("gallery constructors") {
  CHECK_THROWS_AS(example2(4), PreconditionError);
  CHECK_THROWS_AS(example2(1), PreconditionError);
  CHECK_THROWS_AS(example3(0), PreconditionError);
  CHECK(parameter_report(example1().graph).delta_star == 1);
  CHECK(exact_index(example1().graph).index == 1);
  const auto g2 = example2(5).graph;
  CHECK(g2.vertex_count() == 6);
  CHECK(g2.edge_count() == 7);
  const auto g3 = example3(2);
  CHECK(g3.graph.edge_count() == 15);
  CHECK(g3.witness == std::nullopt);

  for (bool chord_at_a : {true, false}) {
    const auto g = c4_chord_graph(chord_at_a);
    CHECK(g.graph().is_simple());
    CHECK(g.edge_count() == 5);
    CHECK(g.f(0) == 2);
    CHECK(g.f(1) == 2);
  }
  const auto c4 = c4_chord();
  REQUIRE(c4.witness.has_value());
  CHECK(check_system(c4.graph, *c4.witness, SystemVariant::kQUnit).empty());
  CHECK(std::holds_alternative<NonMember>(membership(c4.graph, *c4.witness)));
}

TEST_CASE("gallery lookup") {
  CHECK(gallery_names() == std::vector<std::string>{"example1", "example2", "c4-chord", "example3"});
  CHECK(gallery_item("example2").graph == example2(3).graph);
  CHECK(gallery_item("example3", 2).graph == example3(2).graph);
  CHECK_THROWS_AS(gallery_item("example9"), std::invalid_argument);
  CHECK_THROWS_AS(gallery_item("example2", 6), PreconditionError);
}

TEST_CASE("a throwing claim is reported as failed") {
  GalleryItem item;
  item.name = "broken";
  item.claims.push_back({"throws", []() -> ClaimOutcome { throw std::runtime_error("boom"); }});
  item.claims.push_back({"holds", [] { return ClaimOutcome{true, ""}; }});
  const auto results = verify(item);
  CHECK_FALSE(results[0].passed);
  CHECK(results[0].detail.find("boom") != std::string::npos);
  CHECK(results[1].passed);
  CHECK_FALSE(all_passed(results));
}

TEST_CASE("find_witness") {
  const auto w1 = find_witness(example1().graph, SystemVariant::kQOriginal);
  REQUIRE(w1.has_value());
  CHECK(check_system(example1().graph, *w1, SystemVariant::kQOriginal).empty());
  CHECK(std::holds_alternative<NonMember>(membership(example1().graph, *w1)));

  const auto edge = oracle::make_graph({1, 1}, {{0, 1}});
  for (auto v : {SystemVariant::kQOriginal, SystemVariant::kQUnit, SystemVariant::kEdmondsF,
                 SystemVariant::kEdmonds1}) {
    CHECK_FALSE(find_witness(edge, v).has_value());
  }
  for (bool chord_at_a : {true, false}) {
    const auto g = c4_chord_graph(chord_at_a);
    const auto w4 = find_witness(g, SystemVariant::kQUnit);
    REQUIRE(w4.has_value());
    CHECK(check_system(g, *w4, SystemVariant::kQUnit).empty());
    CHECK(std::holds_alternative<NonMember>(membership(g, *w4)));
  }
  // (a)-(c) describes P_f exactly, so it never admits a witness.
  CHECK_FALSE(find_witness(c4_chord_graph(true), SystemVariant::kEdmondsF).has_value());
}

TEST_CASE("random_weighted_graph") {
  CHECK(random_weighted_graph(5, 8, 3, 77) == random_weighted_graph(5, 8, 3, 77));
  std::size_t edges = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto g = random_weighted_graph(5, 8, 3, seed);
    CHECK(g.vertex_count() >= 1);
    CHECK(g.vertex_count() <= 5);
    CHECK(g.edge_count() <= 8);
    for (const auto& e : g.graph().edges()) CHECK(e.u != e.v);
    for (auto f : g.weights()) {
      CHECK(f >= 1);
      CHECK(f <= 3);
    }
    edges += g.edge_count();
  }
  const double average = static_cast<double>(edges) / 1000.0;
  CHECK(average >= 1.0);
  CHECK(average <= 8.0);
}

TEST_CASE("sweep") {
  const auto empty = sweep(0, 9);
  CHECK(empty.instances_tested == 0);
  CHECK(empty.seed == 9);
  CHECK(empty.corollary3_confirmed == 0);
  CHECK(empty.lemma5_confirmed == 0);
  CHECK(empty.qf_gap_witnesses.empty());
  CHECK(empty.failures.empty());

  const auto a = sweep(60, 42);
  CHECK(a.failures.empty());
  CHECK(a.instances_tested == 64);
  CHECK(a.lemma5_confirmed == a.instances_tested);
  CHECK(a.gamma_exceeds_density_count >= 1);
  CHECK_FALSE(a.qf_gap_witnesses.empty());

  const auto b = sweep(60, 42);
  CHECK(a.corollary3_confirmed == b.corollary3_confirmed);
  CHECK(a.corollary4_confirmed == b.corollary4_confirmed);
  CHECK(a.theorem3_confirmed == b.theorem3_confirmed);
  CHECK(a.bounds_confirmed == b.bounds_confirmed);
  REQUIRE(a.qf_gap_witnesses.size() == b.qf_gap_witnesses.size());
  for (std::size_t i = 0; i < a.qf_gap_witnesses.size(); ++i) {
    CHECK(a.qf_gap_witnesses[i].graph == b.qf_gap_witnesses[i].graph);
    CHECK(a.qf_gap_witnesses[i].point == b.qf_gap_witnesses[i].point);
  }
  for (const auto& w : a.qf_gap_witnesses) {
    CHECK(check_system(w.graph, w.point, SystemVariant::kQUnit).empty());
    CHECK(std::holds_alternative<NonMember>(membership(w.graph, w.point)));
  }
}
