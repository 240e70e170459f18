#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "linlay/graph.h"

namespace linlay {

/// Combinatorial embedding: a cyclic order of incident edge ids per vertex,
/// plus a designated outer face as a sequence of directed edges.
struct RotationSystem {
  std::vector<std::vector<int>> order;          // edge ids, cyclic per vertex
  std::vector<std::pair<int, int>> outerFace;   // directed (u, v) walk

  /// Position of edge id e in order[v], or -1.
  int slotOf(int v, int e) const;
};

/// All faces as directed-edge walks under the convention: after entering w
/// through (u, w), leave through the successor of (w, u) in order[w].
std::vector<std::vector<std::pair<int, int>>> traceFaces(const Graph& g, const RotationSystem& rot);

/// V - E + F = 2 on every connected component (faces traced per component).
bool eulerCheck(const Graph& g, const RotationSystem& rot);

/// Planarity test + embedding. On success the rotation system passes the
/// Euler face-count check; when outerVertex is given, the designated outer
/// face contains it. Returns nullopt for nonplanar inputs.
std::optional<RotationSystem> planarEmbed(const Graph& g, std::optional<int> outerVertex = std::nullopt);

}  // namespace linlay
