#include <doctest.h>

#include <random>
#include <sstream>

#include "linlay/cnf.h"
#include "linlay/sat_solver.h"

using namespace linlay;

namespace {

CnfInstance makeInstance(int vars, const std::vector<std::vector<int32_t>>& clauses) {
  CnfInstance cnf;
  cnf.numVars = vars;
  for (const auto& c : clauses)
    cnf.addClause(std::span<const int32_t>(c.data(), c.size()));
  return cnf;
}

// reference decision by exhaustive assignment enumeration
bool satisfiableByEnumeration(const CnfInstance& cnf) {
  if (cnf.numVars > 20)
    throw std::runtime_error("too many vars for enumeration");
  for (uint64_t mask = 0; mask < (1ull << cnf.numVars); mask++) {
    SatModel model;
    model.value.assign(cnf.numVars + 1, false);
    for (int v = 1; v <= cnf.numVars; v++)
      model.value[v] = (mask >> (v - 1)) & 1;
    if (model.satisfies(cnf))
      return true;
  }
  return false;
}

}  // namespace

TEST_CASE("contradicting units are unsatisfiable") {
  auto cnf = makeInstance(1, {{1}, {-1}});
  CHECK(solveCnf(cnf).status == SatStatus::Unsat);
}

TEST_CASE("simple implication chain") {
  auto cnf = makeInstance(2, {{1, 2}, {-1}});
  auto r = solveCnf(cnf);
  REQUIRE(r.status == SatStatus::Sat);
  CHECK(r.model.value[2]);
  CHECK(!r.model.value[1]);
}

TEST_CASE("models satisfy every clause") {
  auto cnf = makeInstance(4, {{1, 2}, {-1, 3}, {-2, 4}, {-3, -4}, {2, 3, 4}});
  auto r = solveCnf(cnf);
  REQUIRE(r.status == SatStatus::Sat);
  CHECK(r.model.satisfies(cnf));
}

TEST_CASE("solver agrees with exhaustive enumeration on random formulas") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 400; t++) {
    int vars = 3 + (int)(rng() % 10);
    int clauses = 2 + (int)(rng() % (3 * vars));
    std::vector<std::vector<int32_t>> cs;
    for (int c = 0; c < clauses; c++) {
      int len = 1 + (int)(rng() % 3);
      std::vector<int32_t> clause;
      for (int l = 0; l < len; l++) {
        int v = 1 + (int)(rng() % vars);
        clause.push_back(rng() % 2 ? v : -v);
      }
      cs.push_back(clause);
    }
    auto cnf = makeInstance(vars, cs);
    bool expected = satisfiableByEnumeration(cnf);
    auto r = solveCnf(cnf);
    REQUIRE(r.status != SatStatus::Timeout);
    CHECK((r.status == SatStatus::Sat) == expected);
    if (r.status == SatStatus::Sat)
      CHECK(r.model.satisfies(cnf));
  }
}

TEST_CASE("pigeonhole 4 into 3 is unsatisfiable") {
  // var(p, h) = p*3 + h + 1 for 4 pigeons, 3 holes
  std::vector<std::vector<int32_t>> cs;
  for (int p = 0; p < 4; p++)
    cs.push_back({p * 3 + 1, p * 3 + 2, p * 3 + 3});
  for (int h = 0; h < 3; h++)
    for (int p1 = 0; p1 < 4; p1++)
      for (int p2 = p1 + 1; p2 < 4; p2++)
        cs.push_back({-(p1 * 3 + h + 1), -(p2 * 3 + h + 1)});
  auto cnf = makeInstance(12, cs);
  CHECK(solveCnf(cnf).status == SatStatus::Unsat);
}

TEST_CASE("dimacs export and re-parse preserve the instance") {
  auto cnf = makeInstance(3, {{1, -2}, {2, 3}, {-1, -3}});
  std::ostringstream out;
  exportDimacs(cnf, out);
  CHECK(out.str().substr(0, 9) == "p cnf 3 3");
  CnfInstance back = parseDimacs(out.str());
  CHECK(back.numVars == cnf.numVars);
  REQUIRE(back.clauseCount() == cnf.clauseCount());
  for (int c = 0; c < cnf.clauseCount(); c++) {
    auto a = cnf.clause(c);
    auto b = back.clause(c);
    CHECK(std::vector<int32_t>(a.begin(), a.end()) == std::vector<int32_t>(b.begin(), b.end()));
  }
}

TEST_CASE("solver output format round trip") {
  auto cnf = makeInstance(3, {{1, -2}, {2, 3}});
  auto r = solveCnf(cnf);
  REQUIRE(r.status == SatStatus::Sat);
  std::string text = formatSolverOutput(r, cnf.numVars);
  SatResult back = parseSolverOutput(text, cnf.numVars);
  CHECK(back.status == SatStatus::Sat);
  CHECK(back.model.value == r.model.value);
  CHECK(parseSolverOutput("s UNSATISFIABLE\n", 3).status == SatStatus::Unsat);
  CHECK_THROWS_AS(parseSolverOutput("no status here\n", 3), Error);
}

TEST_CASE("clause construction is validated") {
  CnfInstance cnf;
  cnf.numVars = 2;
  CHECK_THROWS_AS(cnf.addClause({}), Error);
  CHECK_THROWS_AS(cnf.addClause({3}), Error);
  CHECK_THROWS_AS(cnf.addClause({0}), Error);
}
