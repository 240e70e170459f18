#include "linlay/classify.h"

#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "linlay/formats.h"
#include "linlay/layout.h"

namespace linlay {

std::string ClassifyTask::name() const {
  return std::to_string(stacks) + "s" + std::to_string(queues) + "q";
}

long long ClassificationReport::feasibleCount(int n, ClassifyTask task) const {
  auto it = perN.find(n);
  if (it == perN.end())
    return 0;
  for (int t = 0; t < (int)tasks.size(); t++)
    if (tasks[t] == task)
      return it->second.feasible[t];
  return 0;
}

ClassificationReport classify(const std::vector<Graph>& corpus,
                              const std::vector<ClassifyTask>& tasks,
                              ClassifyOptions opts) {
  ClassificationReport report;
  report.tasks = tasks;
  report.graphs.resize(corpus.size());

  if (!opts.witnessDir.empty())
    std::filesystem::create_directories(opts.witnessDir);

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= corpus.size())
        return;
      const Graph& g = corpus[i];
      GraphRecord& rec = report.graphs[i];
      rec.index = (int)i;
      rec.n = g.n;
      rec.feasible.resize(tasks.size(), Feasibility::Unknown);
      rec.witnessRefs.resize(tasks.size());
      for (int t = 0; t < (int)tasks.size(); t++) {
        SolveOptions so;
        so.timeLimit = opts.timeLimit;
        so.symmetryBreaking = opts.symmetryBreaking;
        SolveOutcome outcome = solveLayout(g, tasks[t].stacks, tasks[t].queues, so);
        rec.feasible[t] = outcome.feasibility;
        if (outcome.feasibility == Feasibility::Feasible && !opts.witnessDir.empty()) {
          std::string name = "graph" + std::to_string(i) + "_" + tasks[t].name() + ".json";
          std::ofstream out(std::filesystem::path(opts.witnessDir) / name);
          out << toLayoutJson(g, *outcome.layout);
          rec.witnessRefs[t] = name;
        }
      }
    }
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; j++)
      pool.emplace_back(worker);
    for (auto& th : pool)
      th.join();
  }

  for (const GraphRecord& rec : report.graphs) {
    PerNCounts& counts = report.perN[rec.n];
    if (counts.feasible.empty()) {
      counts.feasible.assign(tasks.size(), 0);
      counts.unknown.assign(tasks.size(), 0);
    }
    counts.total++;
    for (int t = 0; t < (int)tasks.size(); t++) {
      if (rec.feasible[t] == Feasibility::Feasible)
        counts.feasible[t]++;
      else if (rec.feasible[t] == Feasibility::Unknown)
        counts.unknown[t]++;
    }
  }
  return report;
}

std::vector<Graph> loadCorpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::IoError, "cannot open corpus " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  bool binary = false;
  constexpr std::string_view pcHeader = ">>planar_code<<";
  if (bytes.size() >= pcHeader.size() &&
      std::equal(pcHeader.begin(), pcHeader.end(), bytes.begin()))
    binary = true;
  for (size_t i = 0; i < bytes.size() && !binary; i++)
    if (bytes[i] != '\n' && bytes[i] != '\r' && (bytes[i] < 32 || bytes[i] > 126))
      binary = true;
  try {
    if (binary) {
      std::vector<Graph> graphs;
      for (auto& rec : parsePlanarCode(bytes))
        graphs.push_back(std::move(rec.graph));
      return graphs;
    }
    return parseGraph6File(std::string_view((const char*)bytes.data(), bytes.size()));
  } catch (const Error& e) {
    fail(ErrorCode::MalformedCorpus, std::string("corpus ") + path + ": " + e.what());
  }
}

std::string toReportJson(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  auto tasksJson = nlohmann::ordered_json::array();
  for (const auto& t : report.tasks)
    tasksJson.push_back({{"stacks", t.stacks}, {"queues", t.queues}});
  j["tasks"] = tasksJson;
  auto perN = nlohmann::ordered_json::array();
  for (const auto& [n, counts] : report.perN) {
    nlohmann::ordered_json row;
    row["n"] = n;
    row["total"] = counts.total;
    auto feas = nlohmann::ordered_json();
    for (int t = 0; t < (int)report.tasks.size(); t++) {
      feas[report.tasks[t].name()] = counts.feasible[t];
    }
    row["feasible"] = feas;
    auto unk = nlohmann::ordered_json();
    for (int t = 0; t < (int)report.tasks.size(); t++)
      unk[report.tasks[t].name()] = counts.unknown[t];
    row["unknown"] = unk;
    perN.push_back(row);
  }
  j["per_n"] = perN;
  auto graphs = nlohmann::ordered_json::array();
  for (const auto& rec : report.graphs) {
    nlohmann::ordered_json gj;
    gj["index"] = rec.index;
    gj["n"] = rec.n;
    auto feas = nlohmann::ordered_json();
    for (int t = 0; t < (int)report.tasks.size(); t++) {
      const char* v = rec.feasible[t] == Feasibility::Feasible     ? "yes"
                      : rec.feasible[t] == Feasibility::Infeasible ? "no"
                                                                   : "unknown";
      feas[report.tasks[t].name()] = v;
    }
    gj["feasible"] = feas;
    auto refs = nlohmann::ordered_json();
    for (int t = 0; t < (int)report.tasks.size(); t++)
      if (!rec.witnessRefs[t].empty())
        refs[report.tasks[t].name()] = rec.witnessRefs[t];
    gj["witnesses"] = refs;
    graphs.push_back(gj);
  }
  j["graphs"] = graphs;
  return j.dump(2);
}

std::string toReportTable(const ClassificationReport& report) {
  auto taskIndex = [&](int s, int q) {
    for (int t = 0; t < (int)report.tasks.size(); t++)
      if (report.tasks[t].stacks == s && report.tasks[t].queues == q)
        return t;
    return -1;
  };
  int mixed = taskIndex(1, 1);
  int s2 = taskIndex(2, 0), s3 = taskIndex(3, 0);
  int q2 = taskIndex(0, 2), q3 = taskIndex(0, 3);

  std::ostringstream out;
  out << "n\ttotal";
  if (mixed >= 0)
    out << "\tmixed";
  if (s2 >= 0)
    out << "\t2-stack";
  if (s2 >= 0 && s3 >= 0)
    out << "\t3-stack";
  if (q2 >= 0)
    out << "\t2-queue";
  if (q2 >= 0 && q3 >= 0)
    out << "\t3-queue";
  out << '\n';
  for (const auto& [n, counts] : report.perN) {
    out << n << '\t' << counts.total;
    if (mixed >= 0)
      out << '\t' << counts.feasible[mixed];
    if (s2 >= 0)
      out << '\t' << counts.feasible[s2];
    if (s2 >= 0 && s3 >= 0)
      out << '\t' << counts.feasible[s3] - counts.feasible[s2];
    if (q2 >= 0)
      out << '\t' << counts.feasible[q2];
    if (q2 >= 0 && q3 >= 0)
      out << '\t' << counts.feasible[q3] - counts.feasible[q2];
    out << '\n';
  }
  return out.str();
}

}  // namespace linlay
