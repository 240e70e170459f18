#include "linlay/concentric.h"

#include <json.hpp>

#include <algorithm>
#include <queue>

namespace linlay {

int ConcentricRepresentation::lowerLevelOf(const Graph& g, int edge) const {
  return std::min(layering.dist[g.edges[edge].first], layering.dist[g.edges[edge].second]);
}

namespace {

void checkRotation(const Graph& g, const RotationSystem& rot) {
  if ((int)rot.order.size() != g.n)
    fail(ErrorCode::EmbeddingInvalid, "rotation system size differs from vertex count");
  std::vector<int> seen(g.edgeCount(), 0);
  for (int v = 0; v < g.n; v++) {
    for (int e : rot.order[v]) {
      if (e < 0 || e >= g.edgeCount())
        fail(ErrorCode::EmbeddingInvalid, "rotation references an unknown edge");
      if (g.edges[e].first != v && g.edges[e].second != v)
        fail(ErrorCode::EmbeddingInvalid, "rotation lists an edge not incident to its vertex");
      seen[e]++;
    }
  }
  for (int e = 0; e < g.edgeCount(); e++)
    if (seen[e] != 2)
      fail(ErrorCode::EmbeddingInvalid, "edge missing from an endpoint rotation");
}

}  // namespace

ConcentricRepresentation buildConcentric(const Graph& g, int origin, const RotationSystem& rot) {
  checkRotation(g, rot);
  ConcentricRepresentation rep;
  rep.layering = bfsLevels(g, origin);
  const auto& dist = rep.layering.dist;
  const int k = rep.layering.maxLevel();
  const int m = g.edgeCount();

  // BFS tree in rotation order; parent edge = discovery edge
  std::vector<int> parent(g.n, -1), parentEdge(g.n, -1);
  {
    std::queue<int> q;
    q.push(origin);
    std::vector<bool> discovered(g.n, false);
    discovered[origin] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : rot.order[v]) {
        int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
        if (!discovered[w]) {
          discovered[w] = true;
          parent[w] = v;
          parentEdge[w] = e;
          q.push(w);
        }
      }
    }
  }

  std::vector<bool> isTreeEdge(m, false);
  for (int v = 0; v < g.n; v++)
    if (parentEdge[v] >= 0)
      isTreeEdge[parentEdge[v]] = true;

  // Contour walk of the tree, cut at a corner of the origin on the outer
  // face. Vertices get [first, last] intervals; each non-tree edge leaves
  // one stub per endpoint, positioned by the rotation slot it occupies.
  int startSlot = 0;
  if (!rot.order[origin].empty()) {
    int startEdge = -1;
    for (const auto& [u, v] : rot.outerFace)
      if (u == origin) {
        startEdge = g.edgeIndex(u, v);
        break;
      }
    if (startEdge < 0) {
      for (const auto& face : traceFaces(g, rot)) {
        for (const auto& [u, v] : face)
          if (u == origin) {
            startEdge = g.edgeIndex(u, v);
            break;
          }
        if (startEdge >= 0)
          break;
      }
    }
    if (startEdge < 0)
      fail(ErrorCode::EmbeddingInvalid, "origin borders no face");
    startSlot = rot.slotOf(origin, startEdge);
  }

  long long clock = 0;
  std::vector<long long> first(g.n, -1), last(g.n, -1);
  std::vector<std::vector<std::pair<long long, int>>> stubs(m);  // (position, at vertex)

  struct Frame {
    int vertex;
    int enterSlot;  // slot of the parent edge; the sweep starts after it
    int step;       // slots handled so far
  };
  std::vector<Frame> stack;
  auto open = [&](int v, int enterSlot) {
    first[v] = clock++;
    stack.push_back({v, enterSlot, 0});
  };
  open(origin, startSlot - 1);  // root sweep begins at startSlot itself
  while (!stack.empty()) {
    Frame& f = stack.back();
    int v = f.vertex;
    int deg = (int)rot.order[v].size();
    int total = v == origin ? deg : deg - 1;
    if (f.step == total) {
      last[v] = clock++;
      stack.pop_back();
      continue;
    }
    f.step++;
    int slot = ((f.enterSlot + f.step) % std::max(deg, 1) + deg) % std::max(deg, 1);
    int e = rot.order[v][slot];
    int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
    if (parentEdge[w] == e && parent[w] == v) {
      open(w, rot.slotOf(w, e));
    } else {
      stubs[e].push_back({clock++, v});
    }
  }

  // classification
  rep.classOf.assign(m, EdgeClass::Short);
  rep.crossedLevels.assign(m, {});
  std::vector<long long> divisionKey(m, -1);  // stub position at the lower endpoint
  for (int e = 0; e < m; e++) {
    auto [a, b] = g.edges[e];
    int da = dist[a], db = dist[b];
    if (isTreeEdge[e]) {
      rep.classOf[e] = EdgeClass::Short;
      rep.crossedLevels[e] = {std::min(da, db), std::max(da, db)};
      continue;
    }
    if (stubs[e].size() != 2)
      fail(ErrorCode::EmbeddingInvalid, "contour walk missed a non-tree edge");
    if (da == db) {
      rep.classOf[e] = EdgeClass::Level;
      std::vector<int>& p = rep.crossedLevels[e];
      p.push_back(da);
      for (int j = da + 1; j <= k; j++)
        p.push_back(j);
      for (int j = k; j > da; j--)
        p.push_back(j);
      p.push_back(da);
    } else {
      rep.classOf[e] = EdgeClass::Long;
      int lo = std::min(da, db);
      int lowVertex = da < db ? a : b;
      for (const auto& [pos, at] : stubs[e])
        if (at == lowVertex)
          divisionKey[e] = pos;
      std::vector<int>& p = rep.crossedLevels[e];
      p.push_back(lo);
      for (int j = lo + 1; j <= k; j++)
        p.push_back(j);
      for (int j = k; j >= lo + 2; j--)
        p.push_back(j);
      p.push_back(lo + 1);
    }
  }

  // planarity of the input embedding shows up here as non-interleaving of
  // the stub chords over the walk
  {
    std::vector<std::pair<long long, long long>> chords;
    for (int e = 0; e < m; e++) {
      if (isTreeEdge[e])
        continue;
      long long p1 = stubs[e][0].first, p2 = stubs[e][1].first;
      chords.push_back({std::min(p1, p2), std::max(p1, p2)});
    }
    for (size_t i = 0; i < chords.size(); i++)
      for (size_t j = i + 1; j < chords.size(); j++) {
        auto [a1, b1] = chords[i];
        auto [a2, b2] = chords[j];
        if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
          fail(ErrorCode::EmbeddingInvalid, "rotation system is not a planar embedding");
      }
  }

  // items per level: vertices by first visit, division points by stub key
  rep.items.assign(k + 1, {});
  std::vector<std::vector<std::pair<long long, LevelItem>>> keyed(k + 1);
  for (int v = 0; v < g.n; v++)
    keyed[dist[v]].push_back({first[v], {LevelItem::Vertex, v}});
  for (int e = 0; e < m; e++) {
    if (rep.classOf[e] != EdgeClass::Long)
      continue;
    int level = rep.lowerLevelOf(g, e) + 1;
    if (divisionKey[e] < 0)
      fail(ErrorCode::ConstructionFailed, "long edge without a crossing position");
    // a corner of the lower endpoint never falls inside a deeper subtree span
    for (int v : rep.layering.levels[level])
      if (first[v] < divisionKey[e] && divisionKey[e] < last[v])
        fail(ErrorCode::ConstructionFailed, "crossing position inside a vertex span");
    keyed[level].push_back({divisionKey[e], {LevelItem::Division, e}});
  }
  for (int j = 0; j <= k; j++) {
    std::sort(keyed[j].begin(), keyed[j].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, item] : keyed[j])
      rep.items[j].push_back(item);
  }
  return rep;
}

RepValidation validateRepresentation(const Graph& g, const ConcentricRepresentation& rep) {
  RepValidation out;
  auto flag = [&](const std::string& msg) {
    out.valid = false;
    out.issues.push_back(msg);
  };
  const int m = g.edgeCount();
  const auto& dist = rep.layering.dist;

  if ((int)dist.size() != g.n || (int)rep.classOf.size() != m ||
      (int)rep.crossedLevels.size() != m) {
    flag("representation sizes do not match the graph");
    return out;
  }

  // levels are exact BFS distances from the origin
  BfsLayering fresh;
  try {
    fresh = bfsLevels(g, rep.layering.origin);
  } catch (const Error&) {
    flag("graph is disconnected");
    return out;
  }
  if (fresh.dist != dist)
    flag("stored distances are not the graph distances from the origin");
  if (fresh.levels.size() != rep.layering.levels.size())
    flag("level count differs from the distance range");
  const int k = (int)rep.items.size() - 1;
  if ((int)rep.layering.levels.size() != k + 1) {
    flag("item lists do not cover the levels");
    return out;
  }

  // class constraints and curve level sequences
  for (int e = 0; e < m; e++) {
    auto [a, b] = g.edges[e];
    int lo = std::min(dist[a], dist[b]);
    int hi = std::max(dist[a], dist[b]);
    const auto& p = rep.crossedLevels[e];
    switch (rep.classOf[e]) {
      case EdgeClass::Level:
        if (lo != hi)
          flag("level edge joins two distinct levels");
        else if (p.size() < 2 || p.front() != lo || p.back() != lo ||
                 std::any_of(p.begin() + 1, p.end() - 1, [&](int x) { return x <= lo; }))
          flag("level edge has an invalid crossing sequence");
        break;
      case EdgeClass::Short:
        if (hi != lo + 1)
          flag("short edge does not join consecutive levels");
        else if (p != std::vector<int>{lo, hi})
          flag("short edge crossing sequence must be its two levels");
        break;
      case EdgeClass::Long:
        if (hi != lo + 1)
          flag("long edge does not join consecutive levels");
        else if (p.size() < 3 || p.front() != lo || p[1] != lo + 1 || p.back() != lo + 1 ||
                 std::any_of(p.begin() + 2, p.end() - 1, [&](int x) { return x <= lo + 1; }))
          flag("long edge has an invalid crossing sequence");
        break;
    }
  }

  // per-level items: the level's vertices once each, plus one crossing item
  // per long edge split into this level
  std::vector<int> vertexPos(g.n, -1);
  std::vector<int> divisionPos(m, -1);
  std::vector<int> itemLevel(g.n, -1);
  for (int j = 0; j <= k; j++) {
    for (int i = 0; i < (int)rep.items[j].size(); i++) {
      const LevelItem& item = rep.items[j][i];
      if (item.kind == LevelItem::Vertex) {
        if (item.id < 0 || item.id >= g.n || vertexPos[item.id] != -1) {
          flag("vertex item repeated or out of range");
          continue;
        }
        if (dist[item.id] != j)
          flag("vertex listed on the wrong level");
        vertexPos[item.id] = i;
        itemLevel[item.id] = j;
      } else {
        if (item.id < 0 || item.id >= m || divisionPos[item.id] != -1) {
          flag("division item repeated or out of range");
          continue;
        }
        if (rep.classOf[item.id] != EdgeClass::Long)
          flag("division item for a non-long edge");
        else if (rep.lowerLevelOf(g, item.id) + 1 != j)
          flag("division item on the wrong level");
        divisionPos[item.id] = i;
      }
    }
  }
  for (int v = 0; v < g.n; v++)
    if (vertexPos[v] == -1)
      flag("vertex missing from the level orders");
  for (int e = 0; e < m; e++)
    if (rep.classOf[e] == EdgeClass::Long && divisionPos[e] == -1)
      flag("long edge missing its crossing item");
  if (!out.valid)
    return out;

  // stack side: per level, level edges plus outer halves of long edges must
  // be non-crossing as arcs over the level order
  for (int j = 0; j <= k; j++) {
    std::vector<std::pair<int, int>> arcs;  // (left, right) item positions
    for (int e = 0; e < m; e++) {
      if (rep.classOf[e] == EdgeClass::Level && dist[g.edges[e].first] == j) {
        int x = vertexPos[g.edges[e].first];
        int y = vertexPos[g.edges[e].second];
        arcs.push_back({std::min(x, y), std::max(x, y)});
      } else if (rep.classOf[e] == EdgeClass::Long && rep.lowerLevelOf(g, e) + 1 == j) {
        auto [a, b] = g.edges[e];
        int upper = dist[a] > dist[b] ? a : b;
        int x = divisionPos[e];
        int y = vertexPos[upper];
        arcs.push_back({std::min(x, y), std::max(x, y)});
      }
    }
    for (size_t x = 0; x < arcs.size(); x++)
      for (size_t y = x + 1; y < arcs.size(); y++) {
        auto [a1, b1] = arcs[x];
        auto [a2, b2] = arcs[y];
        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
          continue;
        if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
          flag("crossing arcs within level " + std::to_string(j));
      }
  }

  // queue side: between consecutive levels, short edges and inner halves of
  // long edges must keep the two level orders aligned
  for (int j = 0; j < k; j++) {
    std::vector<std::pair<int, int>> links;  // (pos in level j, pos in level j+1)
    for (int e = 0; e < m; e++) {
      if (rep.lowerLevelOf(g, e) != j)
        continue;
      auto [a, b] = g.edges[e];
      int lowV = dist[a] < dist[b] ? a : b;
      int highV = a == lowV ? b : a;
      if (rep.classOf[e] == EdgeClass::Short && dist[a] != dist[b])
        links.push_back({vertexPos[lowV], vertexPos[highV]});
      else if (rep.classOf[e] == EdgeClass::Long)
        links.push_back({vertexPos[lowV], divisionPos[e]});
    }
    for (size_t x = 0; x < links.size(); x++)
      for (size_t y = x + 1; y < links.size(); y++) {
        auto [a1, b1] = links[x];
        auto [a2, b2] = links[y];
        if (a1 == a2 || b1 == b2)
          continue;
        if ((a1 < a2) != (b1 < b2))
          flag("crossing curves between levels " + std::to_string(j) + " and " + std::to_string(j + 1));
      }
  }
  return out;
}

SubdividedGraph subdivideLongEdges(const Graph& g, const ConcentricRepresentation& rep) {
  SubdividedGraph out;
  out.base = g;
  out.divisionVertexOf.assign(g.edgeCount(), -1);
  int next = g.n;
  for (int e = 0; e < g.edgeCount(); e++)
    if (rep.classOf[e] == EdgeClass::Long)
      out.divisionVertexOf[e] = next++;
  std::vector<Edge> edges;
  for (int e = 0; e < g.edgeCount(); e++) {
    if (out.divisionVertexOf[e] == -1) {
      edges.push_back(g.edges[e]);
    } else {
      auto [a, b] = g.edges[e];
      int lowV = rep.layering.dist[a] < rep.layering.dist[b] ? a : b;
      int highV = a == lowV ? b : a;
      edges.push_back(makeEdge(lowV, out.divisionVertexOf[e]));
      edges.push_back(makeEdge(out.divisionVertexOf[e], highV));
    }
  }
  out.graph = fromEdgeList(next, edges);
  return out;
}

std::pair<SubdividedGraph, MixedLayout> mixedLayoutFromConcentric(const Graph& g,
                                                                  const ConcentricRepresentation& rep) {
  SubdividedGraph sub = subdivideLongEdges(g, rep);
  const auto& dist = rep.layering.dist;

  std::vector<int> seq;
  for (const auto& level : rep.items)
    for (const LevelItem& item : level)
      seq.push_back(item.kind == LevelItem::Vertex ? item.id : sub.divisionVertexOf[item.id]);

  MixedLayout layout;
  layout.order = VertexOrder(std::move(seq));
  layout.pages.kinds = {PageKind::Stack, PageKind::Queue};
  layout.pages.pageOf.assign(sub.graph.edgeCount(), -1);
  auto assign = [&](int u, int v, PageKind kind) {
    int idx = sub.graph.edgeIndex(u, v);
    if (idx < 0)
      fail(ErrorCode::ConstructionFailed, "subdivided edge went missing");
    layout.pages.pageOf[idx] = kind == PageKind::Stack ? 0 : 1;
  };
  for (int e = 0; e < g.edgeCount(); e++) {
    auto [a, b] = g.edges[e];
    switch (rep.classOf[e]) {
      case EdgeClass::Level:
        assign(a, b, PageKind::Stack);
        break;
      case EdgeClass::Short:
        assign(a, b, PageKind::Queue);
        break;
      case EdgeClass::Long: {
        int lowV = dist[a] < dist[b] ? a : b;
        int highV = a == lowV ? b : a;
        int d = sub.divisionVertexOf[e];
        assign(lowV, d, PageKind::Queue);   // inner half, between the circles
        assign(d, highV, PageKind::Stack);  // outer half, beyond the upper circle
        break;
      }
    }
  }

  auto report = verifyMixed(sub.graph, layout);
  if (!report.valid)
    fail(ErrorCode::ConstructionFailed, "construction produced an invalid mixed layout");
  return {std::move(sub), std::move(layout)};
}

std::string toRepresentationJson(const Graph& g, const ConcentricRepresentation& rep) {
  nlohmann::ordered_json j;
  j["origin"] = rep.layering.origin;
  auto levels = nlohmann::ordered_json::array();
  for (int lv = 0; lv < (int)rep.items.size(); lv++) {
    nlohmann::ordered_json levelJson;
    levelJson["index"] = lv;
    auto arr = nlohmann::ordered_json::array();
    for (const LevelItem& item : rep.items[lv]) {
      if (item.kind == LevelItem::Vertex) {
        arr.push_back({{"vertex", item.id}});
      } else {
        arr.push_back({{"division_of", {g.edges[item.id].first, g.edges[item.id].second}}});
      }
    }
    levelJson["items"] = arr;
    levels.push_back(levelJson);
  }
  j["levels"] = levels;
  const char* names[] = {"level", "short", "long"};
  nlohmann::ordered_json classes;
  for (int c = 0; c < 3; c++) {
    auto arr = nlohmann::ordered_json::array();
    for (int e = 0; e < g.edgeCount(); e++)
      if ((int)rep.classOf[e] == c)
        arr.push_back({g.edges[e].first, g.edges[e].second});
    classes[names[c]] = arr;
  }
  j["classes"] = classes;
  auto crossings = nlohmann::ordered_json::array();
  for (int e = 0; e < g.edgeCount(); e++) {
    if (rep.classOf[e] != EdgeClass::Long)
      continue;
    nlohmann::ordered_json entry;
    entry["edge"] = {g.edges[e].first, g.edges[e].second};
    entry["levels"] = rep.crossedLevels[e];
    crossings.push_back(entry);
  }
  j["long_edge_crossings"] = crossings;
  return j.dump();
}

}  // namespace linlay
