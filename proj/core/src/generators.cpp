#include "linlay/generators.h"

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace linlay {

Graph gadgetGraph(int connectors) {
  return counterexampleGraph(1, connectors);
}

Graph counterexampleGraph(int copies, int connectors) {
  if (copies < 1 || connectors < 1)
    fail(ErrorCode::BadArgument, "need at least one copy and one connector");
  const int A = 0, B = 1;
  int next = 2;
  std::vector<Edge> edges;
  for (int i = 0; i < copies; i++) {
    int s = next++;
    int t = next++;
    edges.push_back({s, t});
    edges.push_back({A, s});
    edges.push_back({A, t});
    edges.push_back({B, s});
    edges.push_back({B, t});
    for (int j = 0; j < connectors; j++) {
      int x = next++;
      edges.push_back({s, x});
      edges.push_back({t, x});
    }
  }
  return fromEdgeList(next, edges);
}

Graph goldnerHarary() {
  // triangular bipyramid: apexes 0, 1 over triangle 2, 3, 4
  std::vector<Edge> edges = {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                             {2, 3}, {2, 4}, {3, 4}};
  const std::array<std::array<int, 3>, 6> faces = {{{0, 2, 3}, {0, 3, 4}, {0, 2, 4},
                                                    {1, 2, 3}, {1, 3, 4}, {1, 2, 4}}};
  int next = 5;
  for (const auto& f : faces) {
    int v = next++;
    for (int u : f)
      edges.push_back({u, v});
  }
  return fromEdgeList(next, edges);
}

namespace {

struct TriangulationBuilder {
  // faces as vertex triples; edge -> the two faces on its sides
  std::vector<std::array<int, 3>> faces;
  std::map<Edge, std::array<int, 2>> sides;

  void addFace(int f, const std::array<int, 3>& tri) {
    for (int i = 0; i < 3; i++) {
      Edge e = makeEdge(tri[i], tri[(i + 1) % 3]);
      auto it = sides.find(e);
      if (it == sides.end())
        it = sides.insert({e, {-1, -1}}).first;
      auto& s = it->second;
      if (s[0] == -1)
        s[0] = f;
      else
        s[1] = f;
    }
  }

  void detachFace(int f, const std::array<int, 3>& tri) {
    for (int i = 0; i < 3; i++) {
      Edge e = makeEdge(tri[i], tri[(i + 1) % 3]);
      auto& s = sides[e];
      if (s[0] == f)
        s[0] = s[1];
      s[1] = -1;
    }
  }
};

}  // namespace

Graph randomTriangulation(int n, uint64_t seed) {
  if (n < 3)
    fail(ErrorCode::BadArgument, "triangulations need n >= 3");
  std::mt19937_64 rng(seed);
  TriangulationBuilder b;
  b.faces.push_back({0, 1, 2});
  b.faces.push_back({0, 1, 2});  // the two sides of the starting triangle
  b.addFace(0, b.faces[0]);
  b.addFace(1, b.faces[1]);

  for (int v = 3; v < n; v++) {
    int f = (int)(rng() % b.faces.size());
    std::array<int, 3> tri = b.faces[f];
    b.detachFace(f, tri);
    b.faces[f] = {tri[0], tri[1], v};
    b.addFace(f, b.faces[f]);
    int g1 = (int)b.faces.size();
    b.faces.push_back({tri[1], tri[2], v});
    b.addFace(g1, b.faces[g1]);
    int g2 = (int)b.faces.size();
    b.faces.push_back({tri[0], tri[2], v});
    b.addFace(g2, b.faces[g2]);
  }

  // random diagonal flips to leave the stacked family
  if (n >= 4) {
    std::vector<Edge> all;
    int flips = 10 * n;
    for (int t = 0; t < flips; t++) {
      all.clear();
      for (const auto& [e, s] : b.sides)
        all.push_back(e);
      Edge e = all[rng() % all.size()];
      auto s = b.sides[e];
      if (s[0] == -1 || s[1] == -1)
        continue;
      auto opposite = [&](int f) {
        for (int x : b.faces[f])
          if (x != e.first && x != e.second)
            return x;
        return -1;
      };
      int c = opposite(s[0]);
      int d = opposite(s[1]);
      if (c == d || b.sides.count(makeEdge(c, d)))
        continue;  // flip would duplicate an edge
      std::array<int, 3> f0 = b.faces[s[0]], f1 = b.faces[s[1]];
      b.detachFace(s[0], f0);
      b.detachFace(s[1], f1);
      b.sides.erase(e);
      b.faces[s[0]] = {c, d, e.first};
      b.faces[s[1]] = {c, d, e.second};
      b.addFace(s[0], b.faces[s[0]]);
      b.addFace(s[1], b.faces[s[1]]);
    }
  }

  std::vector<Edge> edges;
  for (const auto& [e, s] : b.sides)
    edges.push_back(e);
  return fromEdgeList(n, edges);
}

Graph subdivideAllEdges(const Graph& g) {
  std::vector<Edge> edges;
  int next = g.n;
  for (const auto& [u, v] : g.edges) {
    edges.push_back({u, next});
    edges.push_back({v, next});
    next++;
  }
  return fromEdgeList(next, edges);
}

}  // namespace linlay
