#include <doctest.h>

#include "linlay/generators.h"
#include "linlay/planarity.h"
#include "test_util.h"

using namespace linlay;

TEST_CASE("gadget sizes follow the closed form") {
  Graph h7 = gadgetGraph(7);
  CHECK(h7.n == 11);
  CHECK(h7.edgeCount() == 19);
  Graph h1 = gadgetGraph(1);
  CHECK(h1.n == 5);
  CHECK(h1.edgeCount() == 7);
  for (int c = 1; c <= 10; c++)
    CHECK(planarEmbed(gadgetGraph(c)).has_value());
}

TEST_CASE("glued gadget counts match 2 + k(2+c) and k(5+2c)") {
  for (int k = 1; k <= 6; k++) {
    for (int c = 1; c <= 8; c++) {
      Graph g = counterexampleGraph(k, c);
      CHECK(g.n == 2 + k * (2 + c));
      CHECK(g.edgeCount() == k * (5 + 2 * c));
    }
  }
  Graph gc = counterexampleGraph(19, 7);
  CHECK(gc.n == 173);
  CHECK(gc.edgeCount() == 361);
  CHECK(planarEmbed(gc).has_value());
  CHECK(counterexampleGraph(1, 7) == gadgetGraph(7));
}

TEST_CASE("goldner-harary is an 11-vertex maximal planar graph") {
  Graph gh = goldnerHarary();
  CHECK(gh.n == 11);
  CHECK(gh.edgeCount() == 27);
  CHECK(gh.edgeCount() == 3 * gh.n - 6);
  CHECK(planarEmbed(gh).has_value());
  CHECK(isConnected(gh));
}

TEST_CASE("random triangulations are maximal planar and seed-stable") {
  CHECK(randomTriangulation(10, 1).edgeCount() == 24);  // 3n-6
  for (uint64_t seed = 0; seed < 25; seed++) {
    int n = 4 + (int)(seed % 20);
    Graph g = randomTriangulation(n, seed);
    CHECK(g.edgeCount() == 3 * n - 6);
    CHECK(planarEmbed(g).has_value());
    CHECK(isConnected(g));
    CHECK(g == randomTriangulation(n, seed));
  }
  CHECK(!(randomTriangulation(12, 1) == randomTriangulation(12, 2)));
}

TEST_CASE("subdividing every edge gives a bipartite graph") {
  Graph k4 = testutil::completeGraph(4);
  Graph sub = subdivideAllEdges(k4);
  CHECK(sub.n == 10);
  CHECK(sub.edgeCount() == 12);
  CHECK(isBipartite(sub));
  CHECK(!isBipartite(k4));
  std::mt19937_64 rng(67);
  for (int t = 0; t < 10; t++) {
    Graph g = testutil::randomGraph(rng, 3 + (int)(rng() % 8), 0.5);
    Graph s = subdivideAllEdges(g);
    CHECK(s.n == g.n + g.edgeCount());
    CHECK(s.edgeCount() == 2 * g.edgeCount());
    CHECK(isBipartite(s));
  }
}
