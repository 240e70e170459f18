#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linlay/graph.h"

namespace linlay {

/// Total order on the vertices, kept together with its inverse.
struct VertexOrder {
  std::vector<int> seq;  // seq[i] = vertex at position i
  std::vector<int> pos;  // pos[v] = position of vertex v

  VertexOrder() = default;
  explicit VertexOrder(std::vector<int> sequence);

  int size() const { return (int)seq.size(); }
  bool before(int u, int v) const { return pos[u] < pos[v]; }
  VertexOrder reversed() const;
};

enum class PageKind { Stack, Queue };

/// Pages are dense ids 0..s+q-1, stacks first.
struct PageAssignment {
  std::vector<PageKind> kinds;  // per page
  std::vector<int> pageOf;      // per edge index of the underlying graph

  int pageCount() const { return (int)kinds.size(); }
  int stackCount() const;
  int queueCount() const;
};

struct MixedLayout {
  VertexOrder order;
  PageAssignment pages;
};

enum class Relation { Cross, Nest, Disjoint, SharedEndpoint };

/// Endpoint pattern of two distinct edges under an order. Symmetric; nest
/// means either edge covers the other.
Relation relation(const VertexOrder& order, Edge e, Edge f);

struct Violation {
  int edgeA = 0;
  int edgeB = 0;
  Relation rel = Relation::Cross;
  int page = 0;
};

struct VerifyReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks that no two edges on a common stack page cross and no two edges on
/// a common queue page nest. Edges sharing an endpoint never violate.
VerifyReport verifyMixed(const Graph& g, const MixedLayout& layout);

/// Layout JSON schema:
/// {"order": [v...], "pages": [{"kind": "stack"|"queue", "edges": [[u,v],...]}...]}
std::string toLayoutJson(const Graph& g, const MixedLayout& layout);
MixedLayout parseLayoutJson(const Graph& g, std::string_view text);

}  // namespace linlay
