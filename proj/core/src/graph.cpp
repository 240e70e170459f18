#include "linlay/graph.h"

#include <algorithm>
#include <queue>

namespace linlay {

bool Graph::hasEdge(int u, int v) const {
  return edgeIndex(u, v) >= 0;
}

int Graph::edgeIndex(int u, int v) const {
  Edge e = makeEdge(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it != edges.end() && *it == e)
    return (int)(it - edges.begin());
  return -1;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

Graph fromEdgeList(int n, const std::vector<Edge>& pairs) {
  if (n < 0)
    fail(ErrorCode::BadArgument, "vertex count must be non-negative");
  Graph g;
  g.n = n;
  g.edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b)
      fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      fail(ErrorCode::VertexOutOfRange,
           "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") outside [0, " + std::to_string(n) + ")");
    g.edges.push_back(makeEdge(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  auto dup = std::adjacent_find(g.edges.begin(), g.edges.end());
  if (dup != g.edges.end())
    fail(ErrorCode::DuplicateEdge,
         "duplicate edge (" + std::to_string(dup->first) + ", " + std::to_string(dup->second) + ")");
  return g;
}

bool isConnected(const Graph& g) {
  return (int)connectedComponents(g).size() <= 1;
}

std::vector<std::vector<int>> connectedComponents(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<int> comp(g.n, -1);
  int numComp = 0;
  for (int s = 0; s < g.n; s++) {
    if (comp[s] != -1)
      continue;
    comp[s] = numComp;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (comp[w] == -1) {
          comp[w] = numComp;
          q.push(w);
        }
      }
    }
    numComp++;
  }
  std::vector<std::vector<int>> out(numComp);
  for (int v = 0; v < g.n; v++)
    out[comp[v]].push_back(v);
  return out;
}

bool isBipartite(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<int> color(g.n, -1);
  for (int s = 0; s < g.n; s++) {
    if (color[s] != -1)
      continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (color[w] == -1) {
          color[w] = color[u] ^ 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n == b.n && a.edges == b.edges;
}

}  // namespace linlay
