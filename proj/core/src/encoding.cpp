#include "linlay/solve.h"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "linlay/sat_solver.h"

namespace linlay {

namespace {

// literal asserting "u precedes v"
int32_t orderLit(const CnfInstance::VarMap& vm, int u, int v) {
  return u < v ? vm.orderVar(u, v) : -vm.orderVar(v, u);
}

// clause forbidding the vertex sequence a < b < c < d on a common page
void forbidSequence(CnfInstance& cnf, int edgeA, int edgeB, int page,
                    int a, int b, int c, int d) {
  const auto& vm = cnf.varMap;
  cnf.addClause({-vm.pageVar(edgeA, page), -vm.pageVar(edgeB, page),
                 -orderLit(vm, a, b), -orderLit(vm, b, c), -orderLit(vm, c, d)});
}

long long independentPairCount(const Graph& g) {
  std::vector<long long> deg(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    deg[u]++;
    deg[v]++;
  }
  long long m = g.edgeCount();
  long long sharing = 0;
  for (int v = 0; v < g.n; v++)
    sharing += deg[v] * (deg[v] - 1) / 2;
  return m * (m - 1) / 2 - sharing;
}

}  // namespace

CnfInstance encodeLayout(const Graph& g, int stacks, int queues, EncodeOptions opts) {
  if (stacks < 0 || queues < 0 || stacks + queues < 1)
    fail(ErrorCode::BadArgument, "encodeLayout needs s + q >= 1");
  const int n = g.n;
  const int m = g.edgeCount();
  const int pages = stacks + queues;

  CnfInstance cnf;
  cnf.varMap = {true, n, m, stacks, queues};
  cnf.numVars = n * (n - 1) / 2 + m * pages;
  const auto& vm = cnf.varMap;

  // order transitivity over triples, both orientations
  for (int i = 0; i < n; i++) {
    for (int j = i + 1; j < n; j++) {
      for (int k = j + 1; k < n; k++) {
        cnf.addClause({-vm.orderVar(i, j), -vm.orderVar(j, k), vm.orderVar(i, k)});
        cnf.addClause({vm.orderVar(i, j), vm.orderVar(j, k), -vm.orderVar(i, k)});
      }
    }
  }

  // every edge on at least one and at most one page
  std::vector<int32_t> clause;
  for (int e = 0; e < m; e++) {
    clause.clear();
    for (int p = 0; p < pages; p++)
      clause.push_back(vm.pageVar(e, p));
    cnf.addClause(clause);
    for (int p = 0; p < pages; p++)
      for (int r = p + 1; r < pages; r++)
        cnf.addClause({-vm.pageVar(e, p), -vm.pageVar(e, r)});
  }

  // forbidden patterns per unordered pair of independent edges
  for (int e = 0; e < m; e++) {
    auto [a, b] = g.edges[e];
    for (int f = e + 1; f < m; f++) {
      auto [c, d] = g.edges[f];
      if (a == c || a == d || b == c || b == d)
        continue;
      for (int p = 0; p < stacks; p++) {
        // crossings: one endpoint of f strictly inside e's span, in every guise
        forbidSequence(cnf, e, f, p, a, c, b, d);
        forbidSequence(cnf, e, f, p, a, d, b, c);
        forbidSequence(cnf, e, f, p, b, c, a, d);
        forbidSequence(cnf, e, f, p, b, d, a, c);
        forbidSequence(cnf, e, f, p, c, a, d, b);
        forbidSequence(cnf, e, f, p, c, b, d, a);
        forbidSequence(cnf, e, f, p, d, a, c, b);
        forbidSequence(cnf, e, f, p, d, b, c, a);
      }
      for (int p = stacks; p < pages; p++) {
        // nestings: f's span inside e's span or vice versa
        forbidSequence(cnf, e, f, p, a, c, d, b);
        forbidSequence(cnf, e, f, p, a, d, c, b);
        forbidSequence(cnf, e, f, p, b, c, d, a);
        forbidSequence(cnf, e, f, p, b, d, c, a);
        forbidSequence(cnf, e, f, p, c, a, b, d);
        forbidSequence(cnf, e, f, p, c, b, a, d);
        forbidSequence(cnf, e, f, p, d, a, b, c);
        forbidSequence(cnf, e, f, p, d, b, a, c);
      }
    }
  }

  if (opts.symmetryBreaking) {
    if (n >= 2)
      cnf.addClause({vm.orderVar(0, 1)});  // reversal
    if (m >= 1) {
      // the first edge may use only the first page of each kind
      for (int p = 1; p < stacks; p++)
        cnf.addClause({-vm.pageVar(0, p)});
      for (int p = stacks + 1; p < pages; p++)
        cnf.addClause({-vm.pageVar(0, p)});
    }
  }
  return cnf;
}

EncodingStats predictEncodingSize(const Graph& g, int stacks, int queues, EncodeOptions opts) {
  const long long n = g.n;
  const long long m = g.edgeCount();
  const long long pages = stacks + queues;
  EncodingStats stats;
  stats.vars = n * (n - 1) / 2 + m * pages;
  stats.clauses = 2 * (n * (n - 1) * (n - 2) / 6);
  stats.clauses += m;                            // at least one page
  stats.clauses += m * (pages * (pages - 1) / 2);  // at most one page
  stats.clauses += independentPairCount(g) * 8 * pages;
  if (opts.symmetryBreaking) {
    if (n >= 2)
      stats.clauses += 1;
    if (m >= 1)
      stats.clauses += std::max(0, stacks - 1) + std::max(0, queues - 1);
  }
  return stats;
}

MixedLayout decodeLayout(const SatModel& model, const CnfInstance& cnf, const Graph& g) {
  if (!cnf.varMap.present)
    fail(ErrorCode::BadArgument, "instance carries no layout variable map");
  const auto& vm = cnf.varMap;
  const int n = g.n;

  // position = number of predecessors; transitivity makes this a permutation
  std::vector<int> position(n, 0);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      if (model.value[vm.orderVar(u, v)])
        position[v]++;
      else
        position[u]++;
    }
  std::vector<int> seq(n, -1);
  for (int v = 0; v < n; v++) {
    if (position[v] < 0 || position[v] >= n || seq[position[v]] != -1)
      fail(ErrorCode::CyclicOrder, "order variables do not describe a total order");
    seq[position[v]] = v;
  }

  MixedLayout layout;
  layout.order = VertexOrder(std::move(seq));
  for (int p = 0; p < vm.stacks; p++)
    layout.pages.kinds.push_back(PageKind::Stack);
  for (int p = 0; p < vm.queues; p++)
    layout.pages.kinds.push_back(PageKind::Queue);
  layout.pages.pageOf.assign(vm.m, -1);
  for (int e = 0; e < vm.m; e++) {
    for (int p = 0; p < vm.stacks + vm.queues; p++) {
      if (model.value[vm.pageVar(e, p)]) {
        layout.pages.pageOf[e] = p;
        break;
      }
    }
    if (layout.pages.pageOf[e] < 0)
      fail(ErrorCode::ConstructionFailed, "model leaves an edge without a page");
  }

  auto report = verifyMixed(g, layout);
  if (!report.valid)
    fail(ErrorCode::ConstructionFailed, "decoded layout failed verification");
  return layout;
}

namespace {

SatResult runExternalSolver(const CnfInstance& cnf, const std::string& command) {
  if (command.empty())
    fail(ErrorCode::BackendFailure, "external backend needs a solver command");
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path();
  fs::path cnfPath = dir / ("linlay_" + std::to_string(::getpid()) + "_" +
                            std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()) +
                            ".cnf");
  {
    std::ofstream out(cnfPath);
    if (!out)
      fail(ErrorCode::IoError, "cannot write " + cnfPath.string());
    exportDimacs(cnf, out);
  }
  std::string cmd = command + " " + cnfPath.string();
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    fs::remove(cnfPath);
    fail(ErrorCode::BackendFailure, "cannot start: " + cmd);
  }
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
    output.append(buf, got);
  ::pclose(pipe);
  fs::remove(cnfPath);
  return parseSolverOutput(output, cnf.numVars);
}

}  // namespace

SolveOutcome solveLayout(const Graph& g, int stacks, int queues, SolveOptions opts) {
  CnfInstance cnf = encodeLayout(g, stacks, queues, {opts.symmetryBreaking});
  SatResult sat;
  if (opts.backend == SolveBackend::Embedded)
    sat = solveCnf(cnf, opts.timeLimit);
  else
    sat = runExternalSolver(cnf, opts.solverCommand);

  SolveOutcome out;
  switch (sat.status) {
    case SatStatus::Unsat:
      out.feasibility = Feasibility::Infeasible;
      break;
    case SatStatus::Timeout:
      out.feasibility = Feasibility::Unknown;
      break;
    case SatStatus::Sat:
      out.feasibility = Feasibility::Feasible;
      out.layout = decodeLayout(sat.model, cnf, g);
      break;
  }
  return out;
}

namespace {

int smallestPageCount(const Graph& g, int maxPages, bool stacksKind, SolveOptions opts) {
  if (maxPages < 1)
    fail(ErrorCode::BadArgument, "maxPages must be at least 1");
  if (g.edgeCount() == 0)
    return 0;
  for (int k = 1; k <= maxPages; k++) {
    auto outcome = stacksKind ? solveLayout(g, k, 0, opts) : solveLayout(g, 0, k, opts);
    if (outcome.feasibility == Feasibility::Feasible)
      return k;
    if (outcome.feasibility == Feasibility::Unknown)
      fail(ErrorCode::BackendFailure, "decision timed out while searching page numbers");
  }
  fail(ErrorCode::ExceedsMax, "no layout within " + std::to_string(maxPages) + " pages");
}

}  // namespace

int stackNumber(const Graph& g, int maxPages, SolveOptions opts) {
  return smallestPageCount(g, maxPages, true, opts);
}

int queueNumber(const Graph& g, int maxPages, SolveOptions opts) {
  return smallestPageCount(g, maxPages, false, opts);
}

}  // namespace linlay
