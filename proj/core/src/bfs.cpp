#include "linlay/bfs.h"

#include <queue>

namespace linlay {

BfsLayering bfsLevels(const Graph& g, int origin) {
  if (origin < 0 || origin >= g.n)
    fail(ErrorCode::VertexOutOfRange, "bfs origin " + std::to_string(origin));
  auto adj = g.adjacency();
  BfsLayering out;
  out.origin = origin;
  out.dist.assign(g.n, -1);
  out.dist[origin] = 0;
  std::queue<int> q;
  q.push(origin);
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (out.dist[w] == -1) {
        out.dist[w] = out.dist[u] + 1;
        reached++;
        q.push(w);
      }
    }
  }
  if (reached != g.n)
    fail(ErrorCode::Disconnected, "bfs requires a connected graph");
  int k = 0;
  for (int v = 0; v < g.n; v++)
    k = std::max(k, out.dist[v]);
  out.levels.assign(k + 1, {});
  for (int v = 0; v < g.n; v++)
    out.levels[out.dist[v]].push_back(v);
  return out;
}

}  // namespace linlay
