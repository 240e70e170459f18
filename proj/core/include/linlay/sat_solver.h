#pragma once

#include <chrono>
#include <optional>

#include "linlay/cnf.h"

namespace linlay {

/// Complete CDCL decision procedure. Branching is deterministic: lowest-index
/// unassigned variable, false first; identical inputs give identical runs.
/// A time limit turns the complete procedure into a may-timeout one.
SatResult solveCnf(const CnfInstance& cnf,
                   std::optional<std::chrono::milliseconds> timeLimit = std::nullopt);

}  // namespace linlay
