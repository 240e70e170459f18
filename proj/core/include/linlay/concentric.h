#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linlay/bfs.h"
#include "linlay/graph.h"
#include "linlay/layout.h"
#include "linlay/planarity.h"

namespace linlay {

/// level: both endpoints on one level, curve outside that level's circle.
/// short: consecutive levels, curve stays between the two circles.
/// long: consecutive levels, curve escapes past the upper circle and is
/// later split at its first crossing point with it.
enum class EdgeClass { Level, Short, Long };

struct LevelItem {
  enum Kind { Vertex, Division };
  Kind kind = Vertex;
  int id = 0;  // vertex id, or edge index of the long edge being split

  bool operator==(const LevelItem&) const = default;
};

/// Ordered concentric representation: BFS levels with a left-to-right item
/// order per level. Items are the level's vertices plus, for each long edge
/// into this level, the crossing point where it will be subdivided.
struct ConcentricRepresentation {
  BfsLayering layering;
  std::vector<std::vector<LevelItem>> items;       // per level
  std::vector<EdgeClass> classOf;                  // per edge
  std::vector<std::vector<int>> crossedLevels;     // per edge: levels met by its curve, in order

  int lowerLevelOf(const Graph& g, int edge) const;
};

/// Construction behind the existence proof: contour orders from the BFS tree
/// of the embedding, non-tree edges routed through the region beyond the last
/// circle, split where they first cross the circle above their lower level.
ConcentricRepresentation buildConcentric(const Graph& g, int origin, const RotationSystem& rot);

struct RepValidation {
  bool valid = true;
  std::vector<std::string> issues;
};

/// Re-checks every representation invariant from scratch; independent of the
/// construction above.
RepValidation validateRepresentation(const Graph& g, const ConcentricRepresentation& rep);

struct SubdividedGraph {
  Graph base;
  Graph graph;                        // base with each long edge split once
  std::vector<int> divisionVertexOf;  // per base edge: new vertex id or -1
};

SubdividedGraph subdivideLongEdges(const Graph& g, const ConcentricRepresentation& rep);

/// Levels concatenated into one order; level edges and the outer halves of
/// split edges go to the stack page, everything else to the queue page.
/// The returned layout is verified before returning.
std::pair<SubdividedGraph, MixedLayout> mixedLayoutFromConcentric(const Graph& g,
                                                                  const ConcentricRepresentation& rep);

std::string toRepresentationJson(const Graph& g, const ConcentricRepresentation& rep);

}  // namespace linlay
