#include "linlay/formats.h"

#include <json.hpp>

#include <algorithm>

namespace linlay {

namespace {

// graph6 packs the upper triangle column by column:
// x(0,1), x(0,2), x(1,2), x(0,3), ...; 6 bits per printable char.
constexpr std::string_view kGraph6Header = ">>graph6<<";

int readGraph6Order(std::string_view& s) {
  if (s.empty())
    fail(ErrorCode::MalformedHeader, "empty graph6 record");
  unsigned char c = s[0];
  if (c == 126) {
    // 126 introduces an 18-bit (or 36-bit) vertex count
    if (s.size() >= 2 && (unsigned char)s[1] == 126) {
      if (s.size() < 8)
        fail(ErrorCode::TruncatedRecord, "graph6: truncated 36-bit order");
      long long n = 0;
      for (int i = 2; i < 8; i++) {
        unsigned char d = s[i];
        if (d < 63 || d > 126)
          fail(ErrorCode::MalformedHeader, "graph6: invalid order byte");
        n = (n << 6) | (d - 63);
      }
      s.remove_prefix(8);
      if (n > 1000000)
        fail(ErrorCode::MalformedHeader, "graph6: implausible vertex count");
      return (int)n;
    }
    if (s.size() < 4)
      fail(ErrorCode::TruncatedRecord, "graph6: truncated 18-bit order");
    int n = 0;
    for (int i = 1; i < 4; i++) {
      unsigned char d = s[i];
      if (d < 63 || d > 126)
        fail(ErrorCode::MalformedHeader, "graph6: invalid order byte");
      n = (n << 6) | (d - 63);
    }
    s.remove_prefix(4);
    return n;
  }
  if (c < 63 || c > 126)
    fail(ErrorCode::MalformedHeader, "graph6: invalid leading byte");
  s.remove_prefix(1);
  return c - 63;
}

void appendGraph6Order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back((char)(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back((char)(((n >> 12) & 63) + 63));
    out.push_back((char)(((n >> 6) & 63) + 63));
    out.push_back((char)((n & 63) + 63));
  } else {
    fail(ErrorCode::BadArgument, "graph6: vertex count too large");
  }
}

}  // namespace

Graph parseGraph6(std::string_view bytes) {
  std::string_view s = bytes;
  if (s.substr(0, kGraph6Header.size()) == kGraph6Header)
    s.remove_prefix(kGraph6Header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  const int n = readGraph6Order(s);
  const long long bits = (long long)n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if ((long long)s.size() < need)
    fail(ErrorCode::TruncatedRecord, "graph6: record shorter than bit count requires");
  std::vector<Edge> edges;
  long long bit = 0;
  for (int v = 1; v < n; v++) {
    for (int u = 0; u < v; u++, bit++) {
      unsigned char c = s[bit / 6];
      if (c < 63 || c > 126)
        fail(ErrorCode::MalformedHeader, "graph6: invalid data byte");
      int val = (c - 63) >> (5 - bit % 6) & 1;
      if (val)
        edges.push_back({u, v});
    }
  }
  return fromEdgeList(n, edges);
}

std::string toGraph6(const Graph& g) {
  std::string out;
  appendGraph6Order(out, g.n);
  const long long bits = (long long)g.n * (g.n - 1) / 2;
  std::vector<uint8_t> data((bits + 5) / 6, 0);
  long long bit = 0;
  for (int v = 1; v < g.n; v++) {
    for (int u = 0; u < v; u++, bit++) {
      if (g.hasEdge(u, v))
        data[bit / 6] |= (uint8_t)(1 << (5 - bit % 6));
    }
  }
  for (uint8_t b : data)
    out.push_back((char)(b + 63));
  return out;
}

std::vector<Graph> parseGraph6File(std::string_view bytes) {
  std::vector<Graph> out;
  size_t start = 0;
  while (start < bytes.size()) {
    size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos)
      end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.remove_suffix(1);
    if (!line.empty())
      out.push_back(parseGraph6(line));
    start = end + 1;
  }
  return out;
}

std::vector<PlanarCodeRecord> parsePlanarCode(const std::vector<uint8_t>& bytes) {
  std::vector<PlanarCodeRecord> out;
  size_t pos = 0;
  constexpr std::string_view header = ">>planar_code<<";
  if (bytes.size() >= header.size() &&
      std::equal(header.begin(), header.end(), bytes.begin()))
    pos = header.size();
  while (pos < bytes.size()) {
    int n = bytes[pos++];
    if (n == 0)
      fail(ErrorCode::MalformedHeader, "planar_code: multi-byte records are not supported");
    std::vector<std::vector<int>> neighbors(n);
    std::vector<Edge> edges;
    for (int v = 0; v < n; v++) {
      while (true) {
        if (pos >= bytes.size())
          fail(ErrorCode::TruncatedRecord, "planar_code: record ends inside adjacency list");
        int w = bytes[pos++];
        if (w == 0)
          break;
        if (w > n)
          fail(ErrorCode::MalformedHeader, "planar_code: neighbor out of range");
        neighbors[v].push_back(w - 1);
        if (v < w - 1)
          edges.push_back({v, w - 1});
      }
    }
    PlanarCodeRecord rec;
    rec.graph = fromEdgeList(n, edges);
    rec.rotation.order.resize(n);
    for (int v = 0; v < n; v++) {
      for (int w : neighbors[v]) {
        int e = rec.graph.edgeIndex(v, w);
        if (e < 0)
          fail(ErrorCode::MalformedHeader, "planar_code: asymmetric adjacency");
        rec.rotation.order[v].push_back(e);
      }
    }
    // Designate the face traced from the lowest directed edge as outer.
    if (!rec.graph.edges.empty()) {
      auto faces = traceFaces(rec.graph, rec.rotation);
      if (!eulerCheck(rec.graph, rec.rotation))
        fail(ErrorCode::MalformedHeader, "planar_code: adjacency lists are not a planar embedding");
      rec.rotation.outerFace = faces.front();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

Graph parseGraphJson(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("n") || !j.contains("edges"))
    fail(ErrorCode::MalformedHeader, "graph json: expected {\"n\": int, \"edges\": [[u,v],...]}");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      fail(ErrorCode::MalformedHeader, "graph json: bad edge entry");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return fromEdgeList(j["n"].get<int>(), edges);
}

std::string toGraphJson(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges)
    arr.push_back({u, v});
  j["edges"] = arr;
  return j.dump();
}

}  // namespace linlay
