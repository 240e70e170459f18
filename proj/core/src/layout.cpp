#include "linlay/layout.h"

#include <json.hpp>

#include <algorithm>

namespace linlay {

VertexOrder::VertexOrder(std::vector<int> sequence) : seq(std::move(sequence)) {
  pos.assign(seq.size(), -1);
  for (int i = 0; i < (int)seq.size(); i++) {
    int v = seq[i];
    if (v < 0 || v >= (int)seq.size() || pos[v] != -1)
      fail(ErrorCode::BadArgument, "vertex order is not a permutation");
    pos[v] = i;
  }
}

VertexOrder VertexOrder::reversed() const {
  std::vector<int> r(seq.rbegin(), seq.rend());
  return VertexOrder(std::move(r));
}

int PageAssignment::stackCount() const {
  return (int)std::count(kinds.begin(), kinds.end(), PageKind::Stack);
}

int PageAssignment::queueCount() const {
  return (int)std::count(kinds.begin(), kinds.end(), PageKind::Queue);
}

Relation relation(const VertexOrder& order, Edge e, Edge f) {
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second)
    return Relation::SharedEndpoint;
  int el = std::min(order.pos[e.first], order.pos[e.second]);
  int er = std::max(order.pos[e.first], order.pos[e.second]);
  int fl = std::min(order.pos[f.first], order.pos[f.second]);
  int fr = std::max(order.pos[f.first], order.pos[f.second]);
  if (fl < el) {
    std::swap(el, fl);
    std::swap(er, fr);
  }
  // now el < fl
  if (er < fl)
    return Relation::Disjoint;
  return fr < er ? Relation::Nest : Relation::Cross;
}

VerifyReport verifyMixed(const Graph& g, const MixedLayout& layout) {
  const int m = g.edgeCount();
  if ((int)layout.pages.pageOf.size() != m)
    fail(ErrorCode::EdgeSetMismatch, "layout covers " + std::to_string(layout.pages.pageOf.size()) +
                                         " edges, graph has " + std::to_string(m));
  if (layout.order.size() != g.n)
    fail(ErrorCode::EdgeSetMismatch, "order size differs from vertex count");
  for (int e = 0; e < m; e++)
    if (layout.pages.pageOf[e] < 0 || layout.pages.pageOf[e] >= layout.pages.pageCount())
      fail(ErrorCode::EdgeSetMismatch, "edge assigned to an unknown page");

  VerifyReport report;
  for (int a = 0; a < m; a++) {
    for (int b = a + 1; b < m; b++) {
      if (layout.pages.pageOf[a] != layout.pages.pageOf[b])
        continue;
      int page = layout.pages.pageOf[a];
      Relation rel = relation(layout.order, g.edges[a], g.edges[b]);
      PageKind kind = layout.pages.kinds[page];
      if ((kind == PageKind::Stack && rel == Relation::Cross) ||
          (kind == PageKind::Queue && rel == Relation::Nest)) {
        report.valid = false;
        report.violations.push_back({a, b, rel, page});
      }
    }
  }
  return report;
}

std::string toLayoutJson(const Graph& g, const MixedLayout& layout) {
  nlohmann::ordered_json j;
  j["order"] = layout.order.seq;
  auto pages = nlohmann::ordered_json::array();
  for (int p = 0; p < layout.pages.pageCount(); p++) {
    nlohmann::ordered_json pj;
    pj["kind"] = layout.pages.kinds[p] == PageKind::Stack ? "stack" : "queue";
    auto arr = nlohmann::ordered_json::array();
    for (int e = 0; e < g.edgeCount(); e++)
      if (layout.pages.pageOf[e] == p)
        arr.push_back({g.edges[e].first, g.edges[e].second});
    pj["edges"] = arr;
    pages.push_back(pj);
  }
  j["pages"] = pages;
  return j.dump();
}

MixedLayout parseLayoutJson(const Graph& g, std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("order") || !j.contains("pages"))
    fail(ErrorCode::MalformedHeader, "layout json: expected {\"order\":..., \"pages\":...}");
  MixedLayout layout;
  layout.order = VertexOrder(j["order"].get<std::vector<int>>());
  layout.pages.pageOf.assign(g.edgeCount(), -1);
  int p = 0;
  for (const auto& pj : j["pages"]) {
    std::string kind = pj.at("kind").get<std::string>();
    if (kind != "stack" && kind != "queue")
      fail(ErrorCode::MalformedHeader, "layout json: page kind must be stack or queue");
    layout.pages.kinds.push_back(kind == "stack" ? PageKind::Stack : PageKind::Queue);
    for (const auto& ej : pj.at("edges")) {
      int idx = g.edgeIndex(ej[0].get<int>(), ej[1].get<int>());
      if (idx < 0)
        fail(ErrorCode::EdgeSetMismatch, "layout json: edge not present in graph");
      if (layout.pages.pageOf[idx] != -1)
        fail(ErrorCode::EdgeSetMismatch, "layout json: edge assigned twice");
      layout.pages.pageOf[idx] = p;
    }
    p++;
  }
  for (int e = 0; e < g.edgeCount(); e++)
    if (layout.pages.pageOf[e] == -1)
      fail(ErrorCode::EdgeSetMismatch, "layout json: edge missing from pages");
  return layout;
}

}  // namespace linlay
