#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "linlay/common.h"

namespace linlay {

/// Propositional formula in CNF. Clauses live in one flat literal pool;
/// literals are nonzero DIMACS-style signed variable indices.
struct CnfInstance {
  int numVars = 0;
  std::vector<int32_t> literals;
  std::vector<uint32_t> clauseStart = {0};

  /// Present when the instance encodes a layout query (see solve.h):
  /// order variables for vertex pairs u < v, then page variables per edge.
  struct VarMap {
    bool present = false;
    int n = 0;
    int m = 0;
    int stacks = 0;
    int queues = 0;

    int orderVar(int u, int v) const;  // asserts u < v
    int pageVar(int edge, int page) const;
  } varMap;

  int clauseCount() const { return (int)clauseStart.size() - 1; }
  std::span<const int32_t> clause(int i) const {
    return {literals.data() + clauseStart[i], literals.data() + clauseStart[i + 1]};
  }
  void addClause(std::span<const int32_t> lits);
  void addClause(std::initializer_list<int32_t> lits) {
    addClause(std::span<const int32_t>(lits.begin(), lits.size()));
  }
};

/// "p cnf <vars> <clauses>" plus zero-terminated clause lines.
void exportDimacs(const CnfInstance& cnf, std::ostream& sink);
CnfInstance parseDimacs(std::string_view text);

enum class SatStatus { Sat, Unsat, Timeout };

struct SatModel {
  std::vector<bool> value;  // 1-based, index 0 unused

  bool satisfies(const CnfInstance& cnf) const;
};

struct SatResult {
  SatStatus status = SatStatus::Timeout;
  SatModel model;
};

/// Parses "s SATISFIABLE/UNSATISFIABLE" and "v" literal lines as printed by
/// standard solvers.
SatResult parseSolverOutput(std::string_view text, int numVars);

/// Renders a result in the same format (used by the solve-dimacs tool).
std::string formatSolverOutput(const SatResult& result, int numVars);

}  // namespace linlay
