// Enumerates all maximal planar graphs (sphere triangulations) on 4..N
// vertices, up to isomorphism, and writes one graph6 corpus file per size.
//
// Method: every triangulation on n+1 >= 5 vertices contracts to one on n
// vertices, so splitting each vertex of each n-vertex triangulation along
// every hinge pair of its rotation generates all (n+1)-vertex ones.
// Duplicates are removed with a canonical code over the unique (3-connected)
// embedding, trying every starting edge and both orientations.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "linlay/formats.h"
#include "linlay/graph.h"
#include "linlay/planarity.h"

using namespace linlay;

namespace {

std::vector<std::vector<int>> neighborRotations(const Graph& g, const RotationSystem& rot) {
  std::vector<std::vector<int>> out(g.n);
  for (int v = 0; v < g.n; v++)
    for (int e : rot.order[v])
      out[v].push_back(g.edges[e].first == v ? g.edges[e].second : g.edges[e].first);
  return out;
}

std::string codeFrom(const std::vector<std::vector<int>>& adj, int startU, int startV) {
  const int n = (int)adj.size();
  std::vector<int> label(n, -1), order;
  std::vector<int> entry(n, -1);  // neighbor to start the rotation sweep at
  label[startU] = 0;
  order.push_back(startU);
  entry[startU] = startV;
  std::string code;
  for (size_t idx = 0; idx < order.size(); idx++) {
    int v = order[idx];
    const auto& ring = adj[v];
    int start = 0;
    while (ring[start] != entry[v])
      start++;
    for (size_t t = 0; t < ring.size(); t++) {
      int w = ring[(start + t) % ring.size()];
      if (label[w] == -1) {
        label[w] = (int)order.size();
        order.push_back(w);
        entry[w] = v;
      }
      code += (char)('0' + label[w] / 10);
      code += (char)('0' + label[w] % 10);
    }
    code += '|';
  }
  return code;
}

std::string canonicalCode(const Graph& g) {
  auto rot = planarEmbed(g);
  if (!rot)
    throw std::runtime_error("split produced a nonplanar graph");
  auto adj = neighborRotations(g, *rot);
  auto mirrored = adj;
  for (auto& ring : mirrored)
    std::reverse(ring.begin(), ring.end());
  std::string best;
  for (const auto& rings : {adj, mirrored}) {
    for (int v = 0; v < g.n; v++) {
      for (int w : rings[v]) {
        std::string code = codeFrom(rings, v, w);
        if (best.empty() || code < best)
          best = code;
      }
    }
  }
  return best;
}

Graph k4() {
  return fromEdgeList(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// split vertex v along hinge positions i < j of its rotation ring
Graph splitVertex(const Graph& g, const std::vector<int>& ring, int v, int i, int j) {
  const int d = (int)ring.size();
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges)
    if (a != v && b != v)
      edges.push_back({a, b});
  int v2 = g.n;
  int lenA = (j - i + d) % d + 1;
  int lenB = (i - j + d) % d + 1;
  for (int t = 0; t < lenA; t++)
    edges.push_back(makeEdge(v, ring[(i + t) % d]));
  for (int t = 0; t < lenB; t++)
    edges.push_back(makeEdge(v2, ring[(j + t) % d]));
  edges.push_back(makeEdge(v, v2));
  return fromEdgeList(g.n + 1, edges);
}

}  // namespace

int main(int argc, char** argv) {
  int maxN = argc > 1 ? std::atoi(argv[1]) : 11;
  std::filesystem::path outDir = argc > 2 ? argv[2] : "triangulations";
  std::filesystem::create_directories(outDir);

  std::vector<Graph> current = {k4()};
  for (int n = 4; n <= maxN; n++) {
    char name[32];
    std::snprintf(name, sizeof(name), "n%02d.g6", n);
    std::ofstream out(outDir / name);
    for (const Graph& g : current)
      out << toGraph6(g) << "\n";
    std::cerr << "n=" << n << ": " << current.size() << " triangulations\n";
    if (n == maxN)
      break;

    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& g : current) {
      auto rot = planarEmbed(g);
      auto rings = neighborRotations(g, *rot);
      for (int v = 0; v < g.n; v++) {
        const int d = (int)rings[v].size();
        for (int i = 0; i < d; i++) {
          for (int j = i + 1; j < d; j++) {
            Graph split = splitVertex(g, rings[v], v, i, j);
            if (split.edgeCount() != 3 * split.n - 6)
              throw std::runtime_error("split changed the edge budget");
            if (seen.insert(canonicalCode(split)).second)
              next.push_back(split);
          }
        }
      }
    }
    current = std::move(next);
  }
  return 0;
}
