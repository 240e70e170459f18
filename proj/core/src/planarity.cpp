#include "linlay/planarity.h"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>

namespace linlay {

int RotationSystem::slotOf(int v, int e) const {
  const auto& ord = order[v];
  for (int i = 0; i < (int)ord.size(); i++)
    if (ord[i] == e)
      return i;
  return -1;
}

std::vector<std::vector<std::pair<int, int>>> traceFaces(const Graph& g, const RotationSystem& rot) {
  const int m = g.edgeCount();
  // visited[2*e + d]: directed edge e traversed from edges[e].first (d=0) or second (d=1)
  std::vector<bool> visited(2 * m, false);
  auto dirIndex = [&](int e, int from) { return 2 * e + (g.edges[e].first == from ? 0 : 1); };
  std::vector<std::vector<std::pair<int, int>>> faces;
  for (int e0 = 0; e0 < m; e0++) {
    for (int d = 0; d < 2; d++) {
      if (visited[2 * e0 + d])
        continue;
      int u = d == 0 ? g.edges[e0].first : g.edges[e0].second;
      int v = d == 0 ? g.edges[e0].second : g.edges[e0].first;
      int e = e0;
      std::vector<std::pair<int, int>> walk;
      while (!visited[dirIndex(e, u)]) {
        visited[dirIndex(e, u)] = true;
        walk.push_back({u, v});
        int slot = rot.slotOf(v, e);
        if (slot < 0)
          fail(ErrorCode::EmbeddingInvalid, "edge missing from rotation of vertex " + std::to_string(v));
        const auto& ord = rot.order[v];
        int next = ord[(slot + 1) % ord.size()];
        u = v;
        v = g.edges[next].first == v ? g.edges[next].second : g.edges[next].first;
        e = next;
      }
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

bool eulerCheck(const Graph& g, const RotationSystem& rot) {
  auto comps = connectedComponents(g);
  std::vector<int> compOf(g.n, -1);
  for (int c = 0; c < (int)comps.size(); c++)
    for (int v : comps[c])
      compOf[v] = c;
  std::vector<long long> vCount(comps.size(), 0), eCount(comps.size(), 0), fCount(comps.size(), 0);
  for (int c = 0; c < (int)comps.size(); c++)
    vCount[c] = (long long)comps[c].size();
  for (const auto& [u, v] : g.edges)
    eCount[compOf[u]]++;
  for (const auto& face : traceFaces(g, rot))
    fCount[compOf[face.front().first]]++;
  for (int c = 0; c < (int)comps.size(); c++) {
    if (eCount[c] == 0)
      fCount[c] = 1;  // a lone vertex sees only the outer face
    if (vCount[c] - eCount[c] + fCount[c] != 2)
      return false;
  }
  return true;
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;

}  // namespace

std::optional<RotationSystem> planarEmbed(const Graph& g, std::optional<int> outerVertex) {
  if (outerVertex && (*outerVertex < 0 || *outerVertex >= g.n))
    fail(ErrorCode::VertexOutOfRange, "outer vertex out of range");

  BoostGraph bg(g.n);
  for (int e = 0; e < g.edgeCount(); e++)
    boost::add_edge(g.edges[e].first, g.edges[e].second, e, bg);

  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> storage(g.n);
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding);
  if (!planar)
    return std::nullopt;

  RotationSystem rot;
  rot.order.resize(g.n);
  auto indexMap = boost::get(boost::edge_index, bg);
  for (int v = 0; v < g.n; v++) {
    rot.order[v].reserve(storage[v].size());
    for (const auto& ed : storage[v])
      rot.order[v].push_back(boost::get(indexMap, ed));
  }

  if (!eulerCheck(g, rot))
    fail(ErrorCode::EmbeddingInvalid, "embedding failed the Euler face-count check");

  if (g.edgeCount() > 0) {
    auto faces = traceFaces(g, rot);
    int pick = 0;
    if (outerVertex) {
      pick = -1;
      for (int f = 0; f < (int)faces.size() && pick < 0; f++)
        for (const auto& [u, v] : faces[f])
          if (u == *outerVertex) {
            pick = f;
            break;
          }
      // Isolated vertices border no traced face; the outer face is free.
      if (pick < 0)
        pick = 0;
    }
    rot.outerFace = faces[pick];
  }
  return rot;
}

}  // namespace linlay
