#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linlay/common.h"

namespace linlay {

/// Simple undirected graph. Edges are normalized (u < v) and kept sorted
/// lexicographically so iteration order is reproducible.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;  // optional, empty or size n

  int edgeCount() const { return (int)edges.size(); }
  bool hasEdge(int u, int v) const;
  /// Index of (u, v) in the sorted edge list, or -1.
  int edgeIndex(int u, int v) const;
  /// Per-vertex sorted neighbor lists.
  std::vector<std::vector<int>> adjacency() const;
};

/// Validates and normalizes an edge list into a Graph.
Graph fromEdgeList(int n, const std::vector<Edge>& pairs);

bool isConnected(const Graph& g);
bool isBipartite(const Graph& g);

/// Connected components as vertex sets (sorted).
std::vector<std::vector<int>> connectedComponents(const Graph& g);

bool operator==(const Graph& a, const Graph& b);

}  // namespace linlay
