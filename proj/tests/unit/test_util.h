#pragma once

#include <random>
#include <vector>

#include "linlay/graph.h"

namespace linlay::testutil {

/// Erdos-Renyi-ish graph on n vertices, deterministic per rng state.
inline Graph randomGraph(std::mt19937_64& rng, int n, double edgeProb) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (std::uniform_real_distribution<>(0, 1)(rng) < edgeProb)
        edges.push_back({u, v});
  return fromEdgeList(n, edges);
}

inline Graph completeGraph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      edges.push_back({u, v});
  return fromEdgeList(n, edges);
}

inline Graph cycleGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; i++)
    edges.push_back(makeEdge(i, (i + 1) % n));
  return fromEdgeList(n, edges);
}

inline Graph pathGraph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; i++)
    edges.push_back({i, i + 1});
  return fromEdgeList(n, edges);
}

inline Graph randomTree(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; v++)
    edges.push_back(makeEdge((int)(rng() % v), v));
  return fromEdgeList(n, edges);
}

}  // namespace linlay::testutil
