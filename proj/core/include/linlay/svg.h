#pragma once

#include <string>

#include "linlay/graph.h"
#include "linlay/layout.h"

namespace linlay {

/// Arc diagram of a layout: vertices on a horizontal line in order, stack
/// edges as blue arcs above, queue edges as red arcs below. All coordinates
/// are integers, so output bytes are stable across runs.
std::string renderArcDiagram(const Graph& g, const MixedLayout& layout);

}  // namespace linlay
