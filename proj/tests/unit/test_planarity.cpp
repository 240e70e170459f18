#include <doctest.h>

#include "linlay/generators.h"
#include "linlay/planarity.h"
#include "test_util.h"

using namespace linlay;

TEST_CASE("K4 embeds with four faces") {
  Graph k4 = testutil::completeGraph(4);
  auto rot = planarEmbed(k4);
  REQUIRE(rot.has_value());
  CHECK(traceFaces(k4, *rot).size() == 4);
  CHECK(eulerCheck(k4, *rot));
}

TEST_CASE("K5 and K33 are not planar") {
  CHECK(!planarEmbed(testutil::completeGraph(5)).has_value());
  std::vector<Edge> k33;
  for (int u = 0; u < 3; u++)
    for (int v = 3; v < 6; v++)
      k33.push_back({u, v});
  CHECK(!planarEmbed(fromEdgeList(6, k33)).has_value());
}

TEST_CASE("counterexample graph embeds with 190 faces") {
  Graph gc = counterexampleGraph(19, 7);
  REQUIRE(gc.n == 173);
  REQUIRE(gc.edgeCount() == 361);
  auto rot = planarEmbed(gc);
  REQUIRE(rot.has_value());
  // V - E + F = 2 for a connected graph
  CHECK(traceFaces(gc, *rot).size() == 190);
}

TEST_CASE("requested vertex ends up on the outer face") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; t++) {
    Graph g = randomTriangulation(4 + (int)(rng() % 20), rng());
    int v = (int)(rng() % g.n);
    auto rot = planarEmbed(g, v);
    REQUIRE(rot.has_value());
    bool found = false;
    for (const auto& [a, b] : rot->outerFace)
      if (a == v)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("euler check holds across random planar graphs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; t++) {
    Graph g = randomTriangulation(4 + (int)(rng() % 30), rng());
    auto rot = planarEmbed(g);
    REQUIRE(rot.has_value());
    CHECK(eulerCheck(g, *rot));
  }
}

TEST_CASE("embedding copes with sparse and disconnected graphs") {
  Graph g = fromEdgeList(5, {{0, 1}, {2, 3}});
  auto rot = planarEmbed(g);
  REQUIRE(rot.has_value());
  CHECK(eulerCheck(g, *rot));

  Graph lone = fromEdgeList(1, {});
  auto rot1 = planarEmbed(lone, 0);
  REQUIRE(rot1.has_value());
}
