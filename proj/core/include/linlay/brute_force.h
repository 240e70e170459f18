#pragma once

#include <optional>

#include "linlay/graph.h"
#include "linlay/layout.h"

namespace linlay {

enum class SearchStatus { Found, Infeasible, BudgetExceeded };

struct BruteForceResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<MixedLayout> layout;
  long long nodesVisited = 0;
};

/// Exhaustive existence oracle: enumerates vertex orders times page
/// assignments. Search is sequential and first-found, so results are
/// deterministic for a fixed budget. Pruning: mirror orders are skipped
/// always; the first vertex is pinned only for pure-stack queries, where
/// validity is invariant under cyclic rotation. Intended for n <= 9 unless
/// a node budget is supplied (nodeBudget < 0 means unlimited).
BruteForceResult bruteForceSolve(const Graph& g, int stacks, int queues,
                                 long long nodeBudget = -1);

}  // namespace linlay
