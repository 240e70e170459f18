#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exitCode = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args, const std::string& stdinData = "") {
  fs::create_directories(LINLAY_TEST_TMP);
  fs::path inPath = fs::path(LINLAY_TEST_TMP) / "stdin.tmp";
  {
    std::ofstream out(inPath, std::ios::binary);
    out << stdinData;
  }
  std::string cmd = std::string(LINLAY_CLI_PATH) + " " + args + " < " + inPath.string() + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
    r.output.append(buf, got);
  int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmpFile(const std::string& name) {
  fs::create_directories(LINLAY_TEST_TMP);
  return (fs::path(LINLAY_TEST_TMP) / name).string();
}

}  // namespace

TEST_CASE("gen emits graphs in both formats") {
  auto g6 = run("gen gc --copies 19 --connectors 7");
  CHECK(g6.exitCode == 0);
  CHECK(!g6.output.empty());
  auto json = run("gen goldner-harary --format json");
  CHECK(json.exitCode == 0);
  CHECK(json.output.find("\"n\":11") != std::string::npos);
}

TEST_CASE("gen gc pipes into verify-planar") {
  auto gc = run("gen gc --copies 19");
  REQUIRE(gc.exitCode == 0);
  CHECK(run("verify-planar", gc.output).exitCode == 0);
  // K5 in graph6
  CHECK(run("verify-planar", "D~{\n").exitCode == 1);
}

TEST_CASE("solve reports feasibility through exit codes") {
  CHECK(run("solve -s 1 -q 0", "C~\n").exitCode == 1);  // K4 on one stack
  auto ok = run("solve -s 1 -q 1", "C~\n");
  CHECK(ok.exitCode == 0);
  CHECK(ok.output.find("\"order\"") != std::string::npos);
}

TEST_CASE("solve writes witnesses that verify") {
  std::string witness = tmpFile("k4_witness.json");
  std::string graph = tmpFile("k4.g6");
  {
    std::ofstream out(graph);
    out << "C~\n";
  }
  auto solved = run("solve -s 2 -q 0 -i " + graph + " --witness-out " + witness);
  REQUIRE(solved.exitCode == 0);
  CHECK(run("verify --graph " + graph + " --layout " + witness).exitCode == 0);
}

TEST_CASE("verify flags invalid layouts") {
  std::string graph = tmpFile("k4v.g6");
  std::string layout = tmpFile("k4v.json");
  {
    std::ofstream out(graph);
    out << "C~\n";
  }
  {
    std::ofstream out(layout);
    out << R"({"order":[0,1,2,3],"pages":[{"kind":"stack","edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}]})";
  }
  CHECK(run("verify --graph " + graph + " --layout " + layout).exitCode == 1);
}

TEST_CASE("concentric then verify round trips") {
  auto tri = run("gen triangulation -n 30 --seed 4");
  REQUIRE(tri.exitCode == 0);
  std::string sub = tmpFile("sub.json");
  std::string lay = tmpFile("lay.json");
  auto conc = run("concentric --origin 3 --subdivided-out " + sub + " --layout-out " + lay, tri.output);
  REQUIRE(conc.exitCode == 0);
  CHECK(run("verify --graph " + sub + " --layout " + lay).exitCode == 0);
  auto svg = run("render --graph " + sub + " --layout " + lay);
  CHECK(svg.exitCode == 0);
  CHECK(svg.output.find("<svg") != std::string::npos);
}

TEST_CASE("export-cnf header matches and solve-dimacs answers") {
  auto cnf = run("export-cnf -s 1 -q 0", "C~\n");  // K4, one stack: unsatisfiable
  REQUIRE(cnf.exitCode == 0);
  CHECK(cnf.output.substr(0, 5) == "p cnf");
  std::string path = tmpFile("k4.cnf");
  {
    std::ofstream out(path);
    out << cnf.output;
  }
  auto solved = run("solve-dimacs " + path);
  CHECK(solved.exitCode == 20);
  CHECK(solved.output.find("s UNSATISFIABLE") != std::string::npos);
}

TEST_CASE("external solver backend runs through the cli itself") {
  std::string cmd = std::string(LINLAY_CLI_PATH) + " solve-dimacs";
  auto r = run("solve -s 1 -q 1 --backend external-dimacs --solver-cmd '" + cmd + "'", "C~\n");
  CHECK(r.exitCode == 0);
  auto r2 = run("solve -s 1 -q 0 --backend external-dimacs --solver-cmd '" + cmd + "'", "C~\n");
  CHECK(r2.exitCode == 1);
}

TEST_CASE("classify prints a table and writes reports") {
  std::string corpus = tmpFile("corpus.g6");
  {
    std::ofstream out(corpus);
    out << "C~\n";  // K4
  }
  std::string report = tmpFile("report.json");
  auto r = run("classify --corpus " + corpus + " --tasks 1:1,2:0 --report-out " + report + " --table");
  CHECK(r.exitCode == 0);
  CHECK(r.output.find("2-stack") != std::string::npos);
  std::ifstream in(report);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("\"1s1q\": 1") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("bogus-subcommand").exitCode == 2);
  CHECK(run("solve -s 1 -q 0", "this is not a graph\n").exitCode == 2);
}
