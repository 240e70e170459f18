#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linlay/graph.h"
#include "linlay/solve.h"

namespace linlay {

struct ClassifyTask {
  int stacks = 0;
  int queues = 0;

  std::string name() const;  // e.g. "2s0q"
  bool operator==(const ClassifyTask&) const = default;
};

struct GraphRecord {
  int index = 0;
  int n = 0;
  std::vector<Feasibility> feasible;      // per task
  std::vector<std::string> witnessRefs;   // per task; empty unless stored
};

struct PerNCounts {
  long long total = 0;
  std::vector<long long> feasible;  // per task
  std::vector<long long> unknown;   // per task
};

struct ClassificationReport {
  std::vector<ClassifyTask> tasks;
  std::map<int, PerNCounts> perN;
  std::vector<GraphRecord> graphs;

  long long feasibleCount(int n, ClassifyTask task) const;
};

struct ClassifyOptions {
  int jobs = 1;
  std::optional<std::chrono::milliseconds> timeLimit;  // per graph and task
  std::string witnessDir;  // when set, verified witnesses are written here
  bool symmetryBreaking = true;
};

/// Decides every task for every corpus graph. Workers share nothing but an
/// index counter, so counts do not depend on the parallelism degree.
ClassificationReport classify(const std::vector<Graph>& corpus,
                              const std::vector<ClassifyTask>& tasks,
                              ClassifyOptions opts = {});

/// Reads a graph6 or planar_code corpus (format sniffed from content).
std::vector<Graph> loadCorpus(const std::string& path);

std::string toReportJson(const ClassificationReport& report);

/// Text table: one row per n, one column per task, plus derived
/// exact-page-number columns when both deciding tasks are present.
std::string toReportTable(const ClassificationReport& report);

}  // namespace linlay
