#include "linlay/brute_force.h"

#include <algorithm>

namespace linlay {

namespace {

struct Searcher {
  const Graph& g;
  int stacks;
  int queues;
  long long budget;  // < 0 = unlimited
  long long nodes = 0;
  bool exhausted = true;

  std::vector<int> seq;
  std::vector<bool> used;
  std::vector<int> pageOf;  // per edge, -1 unassigned
  std::optional<MixedLayout> found;

  Searcher(const Graph& graph, int s, int q, long long limit)
      : g(graph), stacks(s), queues(q), budget(limit) {
    used.assign(g.n, false);
    pageOf.assign(g.edgeCount(), -1);
  }

  bool spendNode() {
    nodes++;
    if (budget >= 0 && nodes > budget) {
      exhausted = false;
      return false;
    }
    return true;
  }

  bool pagesCompatible(const VertexOrder& order, int e, int f, PageKind kind) {
    Relation rel = relation(order, g.edges[e], g.edges[f]);
    if (kind == PageKind::Stack)
      return rel != Relation::Cross;
    return rel != Relation::Nest;
  }

  bool assignEdges(const VertexOrder& order, int e, int usedStacks, int usedQueues) {
    if (!spendNode())
      return false;
    const int m = g.edgeCount();
    if (e == m) {
      MixedLayout layout;
      layout.order = order;
      for (int p = 0; p < stacks; p++)
        layout.pages.kinds.push_back(PageKind::Stack);
      for (int p = 0; p < queues; p++)
        layout.pages.kinds.push_back(PageKind::Queue);
      layout.pages.pageOf = pageOf;
      found = layout;
      return true;
    }
    // identical pages of one kind: allow at most one fresh page per kind
    int stackLimit = std::min(stacks, usedStacks + 1);
    for (int p = 0; p < stackLimit; p++) {
      bool ok = true;
      for (int f = 0; f < e && ok; f++)
        if (pageOf[f] == p)
          ok = pagesCompatible(order, e, f, PageKind::Stack);
      if (!ok)
        continue;
      pageOf[e] = p;
      if (assignEdges(order, e + 1, std::max(usedStacks, p + 1), usedQueues))
        return true;
      pageOf[e] = -1;
      if (!exhausted)
        return false;
    }
    int queueLimit = std::min(queues, usedQueues + 1);
    for (int p = 0; p < queueLimit; p++) {
      int page = stacks + p;
      bool ok = true;
      for (int f = 0; f < e && ok; f++)
        if (pageOf[f] == page)
          ok = pagesCompatible(order, e, f, PageKind::Queue);
      if (!ok)
        continue;
      pageOf[e] = page;
      if (assignEdges(order, e + 1, usedStacks, std::max(usedQueues, p + 1)))
        return true;
      pageOf[e] = -1;
      if (!exhausted)
        return false;
    }
    return false;
  }

  bool tryOrder() {
    VertexOrder order(seq);
    std::fill(pageOf.begin(), pageOf.end(), -1);
    return assignEdges(order, 0, 0, 0);
  }

  bool placeVertex(int depth) {
    if (!spendNode())
      return false;
    const int n = g.n;
    if (depth == n)
      return tryOrder();
    for (int v = 0; v < n; v++) {
      if (used[v])
        continue;
      // mirror pruning: with the first vertex pinned the reflection fixes
      // position 0, otherwise it swaps the two ends
      if (queues == 0) {
        if (depth == 0 && v != 0)
          continue;
        if (n >= 3 && depth == n - 1 && v < seq[1])
          continue;
      } else {
        if (n >= 2 && depth == n - 1 && v < seq[0])
          continue;
      }
      used[v] = true;
      seq[depth] = v;
      if (placeVertex(depth + 1))
        return true;
      used[v] = false;
      if (!exhausted)
        return false;
    }
    return false;
  }
};

}  // namespace

BruteForceResult bruteForceSolve(const Graph& g, int stacks, int queues, long long nodeBudget) {
  if (stacks < 0 || queues < 0 || stacks + queues < 1)
    fail(ErrorCode::BadArgument, "bruteForceSolve needs s + q >= 1");
  BruteForceResult result;
  if (g.n == 0) {
    result.status = SearchStatus::Found;
    MixedLayout layout;
    for (int p = 0; p < stacks; p++)
      layout.pages.kinds.push_back(PageKind::Stack);
    for (int p = 0; p < queues; p++)
      layout.pages.kinds.push_back(PageKind::Queue);
    result.layout = layout;
    return result;
  }
  Searcher searcher(g, stacks, queues, nodeBudget);
  searcher.seq.assign(g.n, -1);
  bool ok = searcher.placeVertex(0);
  result.nodesVisited = searcher.nodes;
  if (ok) {
    result.status = SearchStatus::Found;
    result.layout = searcher.found;
  } else if (searcher.exhausted) {
    result.status = SearchStatus::Infeasible;
  } else {
    result.status = SearchStatus::BudgetExceeded;
  }
  return result;
}

}  // namespace linlay
