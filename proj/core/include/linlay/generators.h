#pragma once

#include <cstdint>

#include "linlay/graph.h"

namespace linlay {

/// Two adjacent twin vertices joined to shared vertices A, B and to
/// `connectors` degree-2 vertices. Vertex ids: A=0, B=1, s=2, t=3,
/// connectors from 4. With 7 connectors: 11 vertices, 19 edges.
Graph gadgetGraph(int connectors = 7);

/// `copies` gadgets glued at the shared pair A=0, B=1; per copy i the ids
/// s_i, t_i, x_1..x_c follow contiguously. (19, 7) gives 173 vertices and
/// 361 edges.
Graph counterexampleGraph(int copies = 19, int connectors = 7);

/// The 11-vertex 27-edge maximal planar graph obtained by stacking a vertex
/// into every face of the triangular bipyramid.
Graph goldnerHarary();

/// Random maximal planar graph (3n-6 edges): stacked triangulation followed
/// by random diagonal flips. Deterministic per seed.
Graph randomTriangulation(int n, uint64_t seed);

/// One division vertex on every edge; the result is bipartite. New vertices
/// n..n+m-1 follow the edge order.
Graph subdivideAllEdges(const Graph& g);

}  // namespace linlay
