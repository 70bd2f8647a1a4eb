#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "unavoid/graph_class.hpp"
#include "unavoid/named_graphs.hpp"

using namespace unavoid;
using namespace unavoid::named;

TEST_CASE("cubic membership") {
  auto c = cubic_class();
  CHECK(c.name == "cubic");
  CHECK(c.membership(petersen()));
  CHECK(c.membership(complete_graph(4)));
  CHECK_FALSE(c.membership(cycle_graph(5)));
  CHECK_FALSE(c.membership(LabeledGraph(0)));
  CHECK(c.regular_degree == 3);
}

TEST_CASE("girth floor") {
  auto c = parse_graph_class("cubic-girth-ge:5");
  CHECK(c.name == "cubic-girth-ge:5");
  CHECK(c.membership(petersen()));
  CHECK_FALSE(c.membership(k33()));
  CHECK(c.feasibility(VertexSet{0, 1, 2, 3}, path_graph(4)) == PruneReason::None);
  CHECK(c.feasibility(VertexSet{0, 1}, path_graph(4)) == PruneReason::FinishedVertexDeficient);
  LabeledGraph sq = cycle_graph(4);
  CHECK(c.feasibility(VertexSet{0, 1, 2, 3}, sq) == PruneReason::GirthFloor);
  CHECK(parse_graph_class("cubic").name == "cubic");
  CHECK_THROWS(parse_graph_class("cubic-girth-ge:2"));
  CHECK_THROWS(parse_graph_class("cubic-girth-ge:x"));
  CHECK_THROWS(parse_graph_class("planar"));
}

TEST_CASE("restricted classes keep the base feasibility") {
  auto c = restricted_class(cubic_class(), "bipartite-ish", [](const LabeledGraph& g) { return g.order() % 4 == 2; });
  CHECK(c.membership(k33()));
  CHECK_FALSE(c.membership(cube()));
  CHECK(c.feasibility(VertexSet{}, complete_graph(5)) == PruneReason::DegreeTooHigh);
}

TEST_CASE("feasibility only prunes pairs without a cubic extension") {
  std::mt19937 rng(4242);
  auto c = cubic_class();
  int pruned = 0, kept = 0;
  for (int t = 0; t < 600; ++t) {
    int n = 3 + t % 6;
    auto h = oracle::random_graph(rng, n, 0.35 + 0.05 * (t % 4));
    VertexSet bag;
    for (int v = 0; v < n; ++v) {
      if (rng() % 5 != 0) bag.insert(v);
    }
    auto reason = c.feasibility(bag, h);
    CAPTURE(t);
    CHECK(reason != PruneReason::Parity);  // implied by the two degree rules
    if (reason != PruneReason::None) {
      ++pruned;
      CHECK_FALSE(oracle::has_cubic_extension(h, bag, 12));
    } else {
      ++kept;
    }
  }
  CHECK(pruned > 100);
  CHECK(kept > 100);
}

TEST_CASE("prune reasons print") {
  CHECK(to_string(PruneReason::DegreeTooHigh) == "degree_too_high");
  CHECK(to_string(PruneReason::GirthFloor) == "girth_floor");
}
