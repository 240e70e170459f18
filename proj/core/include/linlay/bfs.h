#pragma once

#include <vector>

#include "linlay/graph.h"

namespace linlay {

/// Breadth-first layering from an origin vertex. Level i holds exactly the
/// vertices at graph distance i; every edge joins the same or adjacent levels.
struct BfsLayering {
  int origin = 0;
  std::vector<int> dist;
  std::vector<std::vector<int>> levels;

  int maxLevel() const { return (int)levels.size() - 1; }
};

/// Requires a connected graph (throws Disconnected otherwise).
BfsLayering bfsLevels(const Graph& g, int origin);

}  // namespace linlay
