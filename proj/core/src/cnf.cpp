#include "linlay/cnf.h"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace linlay {

int CnfInstance::VarMap::orderVar(int u, int v) const {
  if (!(0 <= u && u < v && v < n))
    fail(ErrorCode::BadArgument, "orderVar requires 0 <= u < v < n");
  // pairs in lexicographic order, 1-based
  return u * (2 * n - u - 1) / 2 + (v - u - 1) + 1;
}

int CnfInstance::VarMap::pageVar(int edge, int page) const {
  if (edge < 0 || edge >= m || page < 0 || page >= stacks + queues)
    fail(ErrorCode::BadArgument, "pageVar out of range");
  return n * (n - 1) / 2 + edge * (stacks + queues) + page + 1;
}

void CnfInstance::addClause(std::span<const int32_t> lits) {
  if (lits.empty())
    fail(ErrorCode::BadArgument, "empty clause");
  for (int32_t l : lits) {
    int v = l > 0 ? l : -l;
    if (l == 0 || v > numVars)
      fail(ErrorCode::BadArgument, "literal references an undeclared variable");
  }
  literals.insert(literals.end(), lits.begin(), lits.end());
  clauseStart.push_back((uint32_t)literals.size());
}

void exportDimacs(const CnfInstance& cnf, std::ostream& sink) {
  sink << "p cnf " << cnf.numVars << ' ' << cnf.clauseCount() << '\n';
  char buf[16];
  std::string line;
  for (int c = 0; c < cnf.clauseCount(); c++) {
    line.clear();
    for (int32_t l : cnf.clause(c)) {
      auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), l);
      line.append(buf, p);
      line.push_back(' ');
    }
    line += "0\n";
    sink << line;
  }
}

CnfInstance parseDimacs(std::string_view text) {
  CnfInstance cnf;
  std::vector<int32_t> current;
  bool sawHeader = false;
  long long declaredClauses = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty() || line[0] == 'c' || line[0] == '%')
      continue;
    if (line[0] == 'p') {
      std::istringstream iss{std::string(line)};
      std::string p, fmt;
      iss >> p >> fmt >> cnf.numVars >> declaredClauses;
      if (fmt != "cnf" || !iss)
        fail(ErrorCode::MalformedHeader, "dimacs: bad problem line");
      sawHeader = true;
      continue;
    }
    if (!sawHeader)
      fail(ErrorCode::MalformedHeader, "dimacs: clause before problem line");
    std::istringstream iss{std::string(line)};
    long long l;
    while (iss >> l) {
      if (l == 0) {
        cnf.addClause(current);
        current.clear();
      } else {
        current.push_back((int32_t)l);
      }
    }
  }
  if (!current.empty())
    fail(ErrorCode::TruncatedRecord, "dimacs: clause missing terminating 0");
  if (!sawHeader)
    fail(ErrorCode::MalformedHeader, "dimacs: missing problem line");
  if (cnf.clauseCount() != declaredClauses)
    fail(ErrorCode::TruncatedRecord, "dimacs: clause count mismatch");
  return cnf;
}

bool SatModel::satisfies(const CnfInstance& cnf) const {
  for (int c = 0; c < cnf.clauseCount(); c++) {
    bool sat = false;
    for (int32_t l : cnf.clause(c)) {
      int v = l > 0 ? l : -l;
      if (v < (int)value.size() && value[v] == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat)
      return false;
  }
  return true;
}

SatResult parseSolverOutput(std::string_view text, int numVars) {
  SatResult result;
  result.model.value.assign(numVars + 1, false);
  bool sawStatus = false;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty())
      continue;
    if (line[0] == 's') {
      if (line.find("UNSATISFIABLE") != std::string_view::npos)
        result.status = SatStatus::Unsat;
      else if (line.find("SATISFIABLE") != std::string_view::npos)
        result.status = SatStatus::Sat;
      else if (line.find("UNKNOWN") != std::string_view::npos)
        result.status = SatStatus::Timeout;
      else
        fail(ErrorCode::BackendFailure, "solver output: unrecognized status line");
      sawStatus = true;
    } else if (line[0] == 'v') {
      std::istringstream iss{std::string(line.substr(1))};
      long long l;
      while (iss >> l) {
        if (l == 0)
          continue;
        int v = (int)(l > 0 ? l : -l);
        if (v <= numVars)
          result.model.value[v] = l > 0;
      }
    }
  }
  if (!sawStatus)
    fail(ErrorCode::BackendFailure, "solver output: missing s-line");
  return result;
}

std::string formatSolverOutput(const SatResult& result, int numVars) {
  std::string out;
  if (result.status == SatStatus::Unsat)
    return "s UNSATISFIABLE\n";
  if (result.status == SatStatus::Timeout)
    return "s UNKNOWN\n";
  out = "s SATISFIABLE\nv";
  for (int v = 1; v <= numVars; v++) {
    out += ' ';
    if (!result.model.value[v])
      out += '-';
    out += std::to_string(v);
  }
  out += " 0\n";
  return out;
}

}  // namespace linlay
