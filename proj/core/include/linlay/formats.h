#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linlay/graph.h"
#include "linlay/planarity.h"

namespace linlay {

/// Decodes one graph6 record (optional ">>graph6<<" header allowed).
Graph parseGraph6(std::string_view bytes);

/// Canonical graph6 encoding (no trailing newline).
std::string toGraph6(const Graph& g);

/// Parses a whole-file graph6 corpus, one record per line.
std::vector<Graph> parseGraph6File(std::string_view bytes);

struct PlanarCodeRecord {
  Graph graph;
  RotationSystem rotation;
};

/// Parses binary planar_code (as emitted by plane-graph enumerators).
/// Each record carries the embedding, returned as a rotation system.
std::vector<PlanarCodeRecord> parsePlanarCode(const std::vector<uint8_t>& bytes);

/// JSON edge-list schema {"n": int, "edges": [[u,v],...]}.
Graph parseGraphJson(std::string_view text);
std::string toGraphJson(const Graph& g);

}  // namespace linlay
