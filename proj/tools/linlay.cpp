#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "linlay/classify.h"
#include "linlay/concentric.h"
#include "linlay/formats.h"
#include "linlay/generators.h"
#include "linlay/sat_solver.h"
#include "linlay/solve.h"
#include "linlay/svg.h"

using namespace linlay;

namespace {

// exit codes: 0 feasible/valid, 1 infeasible/invalid, 2 usage error, 3 budget/timeout
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

std::string readAll(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string readInput(const std::string& path) {
  if (path.empty() || path == "-")
    return readAll(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::IoError, "cannot open " + path);
  return readAll(in);
}

void writeOutput(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(ErrorCode::IoError, "cannot write " + path);
  out << content;
}

Graph parseGraphAuto(const std::string& bytes) {
  size_t start = bytes.find_first_not_of(" \t\r\n");
  if (start == std::string::npos)
    fail(ErrorCode::MalformedHeader, "empty graph input");
  if (bytes[start] == '{')
    return parseGraphJson(bytes);
  if (bytes.compare(0, 15, ">>planar_code<<") == 0) {
    auto records = parsePlanarCode(std::vector<uint8_t>(bytes.begin(), bytes.end()));
    if (records.empty())
      fail(ErrorCode::MalformedHeader, "planar_code input holds no graph");
    return records.front().graph;
  }
  auto graphs = parseGraph6File(bytes);
  if (graphs.empty())
    fail(ErrorCode::MalformedHeader, "no graph6 record found");
  return graphs.front();
}

Graph readGraphArg(const std::string& path) {
  return parseGraphAuto(readInput(path));
}

std::string emitGraph(const Graph& g, const std::string& format) {
  if (format == "json")
    return toGraphJson(g) + "\n";
  return toGraph6(g) + "\n";
}

std::optional<std::chrono::milliseconds> timeLimitOf(long long ms) {
  if (ms <= 0)
    return std::nullopt;
  return std::chrono::milliseconds(ms);
}

std::vector<ClassifyTask> parseTasks(const std::string& spec) {
  std::vector<ClassifyTask> tasks;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty())
      continue;
    size_t colon = token.find(':');
    if (colon == std::string::npos)
      fail(ErrorCode::BadArgument, "task '" + token + "' is not of the form s:q");
    ClassifyTask t;
    t.stacks = std::stoi(token.substr(0, colon));
    t.queues = std::stoi(token.substr(colon + 1));
    if (t.stacks < 0 || t.queues < 0 || t.stacks + t.queues < 1)
      fail(ErrorCode::BadArgument, "task '" + token + "' needs s + q >= 1");
    tasks.push_back(t);
  }
  if (tasks.empty())
    fail(ErrorCode::BadArgument, "no tasks given");
  return tasks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linlay: stack/queue linear layout toolkit"};
  app.require_subcommand(1);

  std::string input;       // graph input file, - for stdin
  std::string output;      // output file, - for stdout
  std::string format = "graph6";

  // --- solve ---
  auto* solve = app.add_subcommand("solve", "decide an s-stack q-queue layout for a graph");
  int stacks = 0, queues = 0;
  long long timeoutMs = 0;
  bool noSymmetry = false;
  std::string backend = "embedded";
  std::string solverCmd, witnessOut;
  solve->add_option("-i,--input", input, "graph file (graph6/json/planar_code); - for stdin");
  solve->add_option("-s,--stacks", stacks, "number of stack pages");
  solve->add_option("-q,--queues", queues, "number of queue pages");
  solve->add_option("--backend", backend, "embedded | external-dimacs")
      ->check(CLI::IsMember({"embedded", "external-dimacs"}));
  solve->add_option("--solver-cmd", solverCmd, "external solver command (gets the cnf path)");
  solve->add_option("--timeout", timeoutMs, "time limit in milliseconds");
  solve->add_option("--witness-out", witnessOut, "write the layout json here when feasible");
  solve->add_flag("--no-symmetry", noSymmetry, "disable symmetry breaking");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "check a layout json against a graph");
  std::string graphPath, layoutPath;
  verify->add_option("--graph", graphPath, "graph file")->required();
  verify->add_option("--layout", layoutPath, "layout json file")->required();

  // --- verify-planar ---
  auto* verifyPlanar = app.add_subcommand("verify-planar", "exit 0 iff the input graph is planar");
  verifyPlanar->add_option("-i,--input", input, "graph file; - for stdin");

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "emit a generated graph");
  gen->require_subcommand(1);
  gen->fallthrough();
  int connectors = 7, copies = 19, genN = 10;
  uint64_t seed = 0;
  auto* genGadget = gen->add_subcommand("gadget", "twin gadget with degree-2 connectors");
  genGadget->add_option("--connectors", connectors, "connector count (default 7)");
  auto* genGc = gen->add_subcommand("gc", "gadgets glued at a shared vertex pair");
  genGc->add_option("--copies", copies, "gadget copies (default 19)");
  genGc->add_option("--connectors", connectors, "connectors per gadget (default 7)");
  auto* genGh = gen->add_subcommand("goldner-harary", "11-vertex maximal planar graph");
  auto* genTri = gen->add_subcommand("triangulation", "random maximal planar graph");
  genTri->add_option("-n", genN, "vertex count")->required();
  genTri->add_option("--seed", seed, "random seed");
  auto* genSub = gen->add_subcommand("subdivide", "subdivide every edge of the input graph once");
  genSub->add_option("-i,--input", input, "graph file; - for stdin");
  gen->add_option("-o,--output", output, "output file; - for stdout");
  gen->add_option("--format", format, "graph6 | json")->check(CLI::IsMember({"graph6", "json"}));

  // --- concentric ---
  auto* concentric = app.add_subcommand(
      "concentric", "mixed 1-stack 1-queue layout of a subdivision via concentric levels");
  int origin = 0;
  std::string repOut, layoutOut, subdividedOut;
  concentric->add_option("-i,--input", input, "graph file; - for stdin");
  concentric->add_option("--origin", origin, "origin vertex (default 0)");
  concentric->add_option("--rep-out", repOut, "write the representation json here");
  concentric->add_option("--layout-out", layoutOut, "write the layout json here");
  concentric->add_option("--subdivided-out", subdividedOut, "write the subdivided graph json here");

  // --- classify ---
  auto* classifyCmd = app.add_subcommand("classify", "batch feasibility over a corpus");
  std::string corpusPath, tasksSpec = "1:1,2:0,3:0,0:2,0:3", reportOut, witnessDir;
  int jobs = 1;
  bool printTable = false;
  classifyCmd->add_option("--corpus", corpusPath, "graph6 or planar_code corpus")->required();
  classifyCmd->add_option("--tasks", tasksSpec, "comma list of s:q (default 1:1,2:0,3:0,0:2,0:3)");
  classifyCmd->add_option("--jobs", jobs, "worker threads");
  classifyCmd->add_option("--timeout", timeoutMs, "per graph and task, milliseconds");
  classifyCmd->add_option("--report-out", reportOut, "write the json report here");
  classifyCmd->add_option("--witness-dir", witnessDir, "store verified witness layouts here");
  classifyCmd->add_flag("--table", printTable, "print the per-n text table");

  // --- render ---
  auto* render = app.add_subcommand("render", "arc-diagram svg of a graph and layout");
  render->add_option("--graph", graphPath, "graph file")->required();
  render->add_option("--layout", layoutPath, "layout json file")->required();
  render->add_option("-o,--output", output, "svg file; - for stdout");

  // --- export-cnf ---
  auto* exportCnf = app.add_subcommand("export-cnf", "emit the layout instance in DIMACS form");
  exportCnf->add_option("-i,--input", input, "graph file; - for stdin");
  exportCnf->add_option("-s,--stacks", stacks, "number of stack pages");
  exportCnf->add_option("-q,--queues", queues, "number of queue pages");
  exportCnf->add_option("-o,--output", output, "cnf file; - for stdout");
  exportCnf->add_flag("--no-symmetry", noSymmetry, "disable symmetry breaking");

  // --- solve-dimacs ---
  auto* solveDimacs = app.add_subcommand("solve-dimacs", "run the embedded solver on a DIMACS file");
  std::string dimacsPath;
  solveDimacs->add_option("file", dimacsPath, "cnf file; - for stdin");
  solveDimacs->add_option("--timeout", timeoutMs, "time limit in milliseconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      Graph g = readGraphArg(input);
      SolveOptions opts;
      opts.backend = backend == "embedded" ? SolveBackend::Embedded : SolveBackend::ExternalDimacs;
      opts.solverCommand = solverCmd;
      opts.timeLimit = timeLimitOf(timeoutMs);
      opts.symmetryBreaking = !noSymmetry;
      SolveOutcome outcome = solveLayout(g, stacks, queues, opts);
      if (outcome.feasibility == Feasibility::Feasible) {
        std::cerr << "feasible\n";
        if (!witnessOut.empty())
          writeOutput(witnessOut, toLayoutJson(g, *outcome.layout) + "\n");
        else
          std::cout << toLayoutJson(g, *outcome.layout) << "\n";
        return kExitOk;
      }
      if (outcome.feasibility == Feasibility::Infeasible) {
        std::cerr << "infeasible\n";
        return kExitNegative;
      }
      std::cerr << "unknown (time limit)\n";
      return kExitTimeout;
    }

    if (verify->parsed()) {
      Graph g = readGraphArg(graphPath);
      MixedLayout layout = parseLayoutJson(g, readInput(layoutPath));
      VerifyReport report = verifyMixed(g, layout);
      if (report.valid) {
        std::cerr << "valid\n";
        return kExitOk;
      }
      for (const auto& v : report.violations) {
        const char* what = v.rel == Relation::Cross ? "cross" : "nest";
        std::cerr << "violation: edges (" << g.edges[v.edgeA].first << "," << g.edges[v.edgeA].second
                  << ") and (" << g.edges[v.edgeB].first << "," << g.edges[v.edgeB].second << ") "
                  << what << " on page " << v.page << "\n";
      }
      return kExitNegative;
    }

    if (verifyPlanar->parsed()) {
      Graph g = readGraphArg(input);
      if (planarEmbed(g).has_value()) {
        std::cerr << "planar\n";
        return kExitOk;
      }
      std::cerr << "not planar\n";
      return kExitNegative;
    }

    if (gen->parsed()) {
      Graph g;
      if (genGadget->parsed())
        g = gadgetGraph(connectors);
      else if (genGc->parsed())
        g = counterexampleGraph(copies, connectors);
      else if (genGh->parsed())
        g = goldnerHarary();
      else if (genTri->parsed())
        g = randomTriangulation(genN, seed);
      else if (genSub->parsed())
        g = subdivideAllEdges(readGraphArg(input));
      writeOutput(output, emitGraph(g, format));
      return kExitOk;
    }

    if (concentric->parsed()) {
      Graph g = readGraphArg(input);
      auto rot = planarEmbed(g, origin);
      if (!rot) {
        std::cerr << "not planar\n";
        return kExitNegative;
      }
      auto rep = buildConcentric(g, origin, *rot);
      auto [sub, layout] = mixedLayoutFromConcentric(g, rep);
      if (!repOut.empty())
        writeOutput(repOut, toRepresentationJson(g, rep) + "\n");
      if (!subdividedOut.empty())
        writeOutput(subdividedOut, toGraphJson(sub.graph) + "\n");
      std::string layoutJson = toLayoutJson(sub.graph, layout) + "\n";
      if (!layoutOut.empty())
        writeOutput(layoutOut, layoutJson);
      else
        std::cout << layoutJson;
      return kExitOk;
    }

    if (classifyCmd->parsed()) {
      auto corpus = loadCorpus(corpusPath);
      ClassifyOptions opts;
      opts.jobs = jobs;
      opts.timeLimit = timeLimitOf(timeoutMs);
      opts.witnessDir = witnessDir;
      auto report = classify(corpus, parseTasks(tasksSpec), opts);
      if (!reportOut.empty())
        writeOutput(reportOut, toReportJson(report) + "\n");
      if (printTable || reportOut.empty())
        std::cout << toReportTable(report);
      return kExitOk;
    }

    if (render->parsed()) {
      Graph g = readGraphArg(graphPath);
      MixedLayout layout = parseLayoutJson(g, readInput(layoutPath));
      writeOutput(output, renderArcDiagram(g, layout));
      return kExitOk;
    }

    if (exportCnf->parsed()) {
      Graph g = readGraphArg(input);
      CnfInstance cnf = encodeLayout(g, stacks, queues, {!noSymmetry});
      std::ostringstream buf;
      exportDimacs(cnf, buf);
      writeOutput(output, buf.str());
      return kExitOk;
    }

    if (solveDimacs->parsed()) {
      CnfInstance cnf = parseDimacs(readInput(dimacsPath));
      SatResult result = solveCnf(cnf, timeLimitOf(timeoutMs));
      std::cout << formatSolverOutput(result, cnf.numVars);
      // minisat-style exit codes so external harnesses can branch
      if (result.status == SatStatus::Sat)
        return 10;
      if (result.status == SatStatus::Unsat)
        return 20;
      return kExitTimeout;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
