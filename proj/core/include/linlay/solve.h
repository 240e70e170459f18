#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "linlay/cnf.h"
#include "linlay/graph.h"
#include "linlay/layout.h"

namespace linlay {

struct EncodeOptions {
  /// Fix the order of one designated vertex pair (reversal symmetry) and
  /// restrict the first edge to the first page of each kind (pages of one
  /// kind are interchangeable). On by default for decision queries; turn
  /// off when enumerating witnesses.
  bool symmetryBreaking = true;
};

/// Satisfiable iff g admits an s-stack q-queue mixed layout. Variables:
/// one order variable per vertex pair ("u precedes v"), s+q page variables
/// per edge. Clauses: order transitivity, edge-on-exactly-one-page, and the
/// forbidden crossing (stack) / nesting (queue) patterns per independent
/// edge pair.
CnfInstance encodeLayout(const Graph& g, int stacks, int queues, EncodeOptions opts = {});

struct EncodingStats {
  long long vars = 0;
  long long clauses = 0;
};

/// Closed-form size of encodeLayout's output, for cross-checking exports.
EncodingStats predictEncodingSize(const Graph& g, int stacks, int queues, EncodeOptions opts = {});

/// Reads a layout back out of a model: vertex order from the order-variable
/// tournament (acyclic by transitivity), pages from the page variables.
/// The result is verified before it is returned.
MixedLayout decodeLayout(const SatModel& model, const CnfInstance& cnf, const Graph& g);

enum class SolveBackend { Embedded, ExternalDimacs };

struct SolveOptions {
  SolveBackend backend = SolveBackend::Embedded;
  /// Command run as `cmd instance.cnf`; its stdout must carry the usual
  /// "s ..." / "v ..." lines. Required for the external backend.
  std::string solverCommand;
  std::optional<std::chrono::milliseconds> timeLimit;
  bool symmetryBreaking = true;
};

enum class Feasibility { Feasible, Infeasible, Unknown };

struct SolveOutcome {
  Feasibility feasibility = Feasibility::Unknown;
  std::optional<MixedLayout> layout;  // present iff feasible
};

/// encode -> solve -> decode; never returns an unverified witness.
SolveOutcome solveLayout(const Graph& g, int stacks, int queues, SolveOptions opts = {});

/// Smallest s <= maxPages admitting an s-stack layout (0 for edgeless
/// graphs); throws ExceedsMax when none fits. queueNumber likewise.
int stackNumber(const Graph& g, int maxPages, SolveOptions opts = {});
int queueNumber(const Graph& g, int maxPages, SolveOptions opts = {});

}  // namespace linlay
