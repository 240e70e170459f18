#include <doctest.h>

#include <random>

#include "linlay/brute_force.h"
#include "linlay/generators.h"
#include "linlay/sat_solver.h"
#include "linlay/solve.h"
#include "test_util.h"

using namespace linlay;

TEST_CASE("encoding size matches the closed form on K4") {
  Graph k4 = testutil::completeGraph(4);
  EncodeOptions noSym{false};
  CnfInstance cnf = encodeLayout(k4, 1, 1, noSym);
  // 6 order vars + 12 page vars
  CHECK(cnf.numVars == 18);
  // transitivity 2*C(4,3)=8; pages 6+6; three independent pairs, 8 patterns
  // per pair per page: 48
  CHECK(cnf.clauseCount() == 8 + 12 + 48);
  auto stats = predictEncodingSize(k4, 1, 1, noSym);
  CHECK(stats.vars == cnf.numVars);
  CHECK(stats.clauses == cnf.clauseCount());
}

TEST_CASE("predicted sizes match generated sizes across random graphs") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 60; t++) {
    Graph g = testutil::randomGraph(rng, 1 + (int)(rng() % 8), 0.5);
    int s = (int)(rng() % 3), q = (int)(rng() % 3);
    if (s + q == 0)
      q = 1;
    EncodeOptions opts{rng() % 2 == 0};
    CnfInstance cnf = encodeLayout(g, s, q, opts);
    auto stats = predictEncodingSize(g, s, q, opts);
    CHECK(stats.vars == cnf.numVars);
    CHECK(stats.clauses == cnf.clauseCount());
  }
}

TEST_CASE("single edge on one stack is trivially satisfiable") {
  Graph g = fromEdgeList(2, {{0, 1}});
  auto r = solveCnf(encodeLayout(g, 1, 0));
  CHECK(r.status == SatStatus::Sat);
}

TEST_CASE("K4 on one stack is unsatisfiable, matching brute force") {
  Graph k4 = testutil::completeGraph(4);
  CHECK(solveCnf(encodeLayout(k4, 1, 0)).status == SatStatus::Unsat);
  CHECK(bruteForceSolve(k4, 1, 0).status == SearchStatus::Infeasible);
  CHECK(solveCnf(encodeLayout(k4, 1, 1)).status == SatStatus::Sat);
}

TEST_CASE("decode produces verified layouts end to end") {
  Graph k4 = testutil::completeGraph(4);
  auto outcome = solveLayout(k4, 2, 0);
  REQUIRE(outcome.feasibility == Feasibility::Feasible);
  CHECK(verifyMixed(k4, *outcome.layout).valid);

  Graph p3 = testutil::pathGraph(3);
  auto p = solveLayout(p3, 1, 0);
  REQUIRE(p.feasibility == Feasibility::Feasible);
  CHECK(verifyMixed(p3, *p.layout).valid);

  Graph c5 = testutil::cycleGraph(5);
  auto q = solveLayout(c5, 0, 1);
  REQUIRE(q.feasibility == Feasibility::Feasible);
  CHECK(verifyMixed(c5, *q.layout).valid);
  CHECK(bruteForceSolve(c5, 0, 1).status == SearchStatus::Found);
}

TEST_CASE("K5 fits four stacks and the witness verifies") {
  Graph k5 = testutil::completeGraph(5);
  auto outcome = solveLayout(k5, 4, 0);
  REQUIRE(outcome.feasibility == Feasibility::Feasible);
  CHECK(verifyMixed(k5, *outcome.layout).valid);
}

TEST_CASE("feasibility agrees with brute force on small graphs") {
  std::mt19937_64 rng(41);
  const std::pair<int, int> tasks[] = {{1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}};
  for (int t = 0; t < 60; t++) {
    Graph g = testutil::randomGraph(rng, 1 + (int)(rng() % 6), 0.5);
    for (auto [s, q] : tasks) {
      auto sat = solveLayout(g, s, q);
      auto brute = bruteForceSolve(g, s, q);
      REQUIRE(sat.feasibility != Feasibility::Unknown);
      REQUIRE(brute.status != SearchStatus::BudgetExceeded);
      CHECK((sat.feasibility == Feasibility::Feasible) == (brute.status == SearchStatus::Found));
    }
  }
}

TEST_CASE("monotonicity: adding pages keeps instances feasible") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 25; t++) {
    Graph g = testutil::randomGraph(rng, 2 + (int)(rng() % 5), 0.6);
    int s = (int)(rng() % 2), q = (int)(rng() % 2);
    if (s + q == 0)
      s = 1;
    if (solveLayout(g, s, q).feasibility == Feasibility::Feasible) {
      CHECK(solveLayout(g, s + 1, q).feasibility == Feasibility::Feasible);
      CHECK(solveLayout(g, s, q + 1).feasibility == Feasibility::Feasible);
    }
  }
}

TEST_CASE("page numbers via the decision procedure") {
  CHECK(stackNumber(testutil::completeGraph(4), 4) == 2);
  CHECK(queueNumber(testutil::pathGraph(6), 4) == 1);  // trees take one queue
  CHECK(stackNumber(testutil::cycleGraph(6), 4) == 1);
  CHECK(stackNumber(fromEdgeList(3, {}), 4) == 0);
  CHECK_THROWS_AS(stackNumber(testutil::completeGraph(6), 2), Error);  // sn(K6)=3
}

TEST_CASE("symmetry breaking preserves feasibility") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 40; t++) {
    Graph g = testutil::randomGraph(rng, 2 + (int)(rng() % 5), 0.5);
    int s = (int)(rng() % 2), q = (int)(rng() % 2);
    if (s + q == 0)
      q = 2;
    SolveOptions with, without;
    without.symmetryBreaking = false;
    CHECK(solveLayout(g, s, q, with).feasibility == solveLayout(g, s, q, without).feasibility);
  }
}

TEST_CASE("goldner-harary graph needs three stacks") {
  Graph gh = goldnerHarary();
  CHECK(solveLayout(gh, 2, 0).feasibility == Feasibility::Infeasible);
  auto r = solveLayout(gh, 3, 0);
  REQUIRE(r.feasibility == Feasibility::Feasible);
  CHECK(verifyMixed(gh, *r.layout).valid);
  CHECK(stackNumber(gh, 3) == 3);
}
