#include "linlay/sat_solver.h"

#include <algorithm>

namespace linlay {

namespace {

// Literals are encoded as 2*(var-1) + sign so they index watch lists directly.
using Lit = int;
constexpr Lit kUndefLit = -1;

inline Lit encode(int32_t dimacs) {
  int v = dimacs > 0 ? dimacs : -dimacs;
  return 2 * (v - 1) + (dimacs < 0 ? 1 : 0);
}
inline int litVar(Lit l) { return l >> 1; }     // 0-based
inline bool litSign(Lit l) { return l & 1; }    // true = negated
inline Lit negate(Lit l) { return l ^ 1; }

struct Clause {
  int start = 0;
  int size = 0;
};

class Solver {
 public:
  explicit Solver(const CnfInstance& cnf) : numVars_(cnf.numVars) {
    assigns_.assign(numVars_, -1);
    level_.assign(numVars_, 0);
    reason_.assign(numVars_, -1);
    seen_.assign(numVars_, false);
    watches_.assign(2 * numVars_, {});
    std::vector<Lit> scratch;
    for (int c = 0; c < cnf.clauseCount() && !contradiction_; c++) {
      scratch.clear();
      bool tautology = false;
      for (int32_t l : cnf.clause(c)) {
        Lit enc = encode(l);
        if (std::find(scratch.begin(), scratch.end(), enc) != scratch.end())
          continue;
        if (std::find(scratch.begin(), scratch.end(), negate(enc)) != scratch.end()) {
          tautology = true;
          break;
        }
        scratch.push_back(enc);
      }
      if (tautology)
        continue;
      addClause(scratch);
    }
  }

  SatStatus solve(std::optional<std::chrono::steady_clock::time_point> deadline) {
    if (contradiction_)
      return SatStatus::Unsat;
    long long conflictsUntilRestart = restartBase_;
    int lubyIndex = 1;
    while (true) {
      int confl = propagate();
      if (confl != -1) {
        conflicts_++;
        if (decisionLevel() == 0)
          return SatStatus::Unsat;
        std::vector<Lit> learnt;
        int backLevel = analyze(confl, learnt);
        backtrack(backLevel);
        int idx = addClause(learnt);
        if (learnt.size() > 1)
          enqueue(learnt[0], idx);
        conflictsUntilRestart--;
        if ((conflicts_ & 1023) == 0 && deadline &&
            std::chrono::steady_clock::now() > *deadline)
          return SatStatus::Timeout;
        if (conflictsUntilRestart <= 0) {
          conflictsUntilRestart = restartBase_ * luby(++lubyIndex);
          backtrack(0);
        }
      } else {
        int next = pickBranchVar();
        if (next == -1)
          return SatStatus::Sat;
        trailLim_.push_back((int)trail_.size());
        enqueue(2 * next + 1, -1);  // branch false first
      }
    }
  }

  std::vector<bool> model() const {
    std::vector<bool> out(numVars_ + 1, false);
    for (int v = 0; v < numVars_; v++)
      out[v + 1] = assigns_[v] == 1;
    return out;
  }

 private:
  int decisionLevel() const { return (int)trailLim_.size(); }

  // -1 unknown, 0 false, 1 true (for the literal)
  int litValue(Lit l) const {
    int a = assigns_[litVar(l)];
    if (a < 0)
      return -1;
    return a ^ (int)litSign(l);
  }

  static long long luby(int i) {
    // sequence 1,1,2,1,1,2,4,...
    for (int k = 1; k < 32; k++) {
      if (i == (1 << k) - 1)
        return 1LL << (k - 1);
      if (i < (1 << k) - 1)
        return luby(i - (1 << (k - 1)) + 1);
    }
    return 1;
  }

  int addClause(const std::vector<Lit>& lits) {
    if (lits.empty()) {
      contradiction_ = true;
      return -1;
    }
    if (lits.size() == 1) {
      if (litValue(lits[0]) == 0 && level_[litVar(lits[0])] == 0) {
        contradiction_ = true;
        return -1;
      }
      if (litValue(lits[0]) == -1)
        enqueue(lits[0], -1);
      return -1;
    }
    int idx = (int)clauses_.size();
    clauses_.push_back({(int)pool_.size(), (int)lits.size()});
    pool_.insert(pool_.end(), lits.begin(), lits.end());
    watches_[negate(lits[0])].push_back(idx);
    watches_[negate(lits[1])].push_back(idx);
    return idx;
  }

  void enqueue(Lit l, int reasonClause) {
    assigns_[litVar(l)] = litSign(l) ? 0 : 1;
    level_[litVar(l)] = decisionLevel();
    reason_[litVar(l)] = reasonClause;
    trail_.push_back(l);
  }

  // Returns the index of a conflicting clause, or -1.
  int propagate() {
    while (head_ < (int)trail_.size()) {
      Lit p = trail_[head_++];
      auto& list = watches_[p];
      size_t keep = 0;
      for (size_t i = 0; i < list.size(); i++) {
        int ci = list[i];
        Clause& c = clauses_[ci];
        Lit* lits = pool_.data() + c.start;
        // ensure the falsified literal sits at slot 1
        Lit falsified = negate(p);
        if (lits[0] == falsified)
          std::swap(lits[0], lits[1]);
        if (litValue(lits[0]) == 1) {
          list[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (int j = 2; j < c.size; j++) {
          if (litValue(lits[j]) != 0) {
            std::swap(lits[1], lits[j]);
            watches_[negate(lits[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved)
          continue;
        list[keep++] = ci;
        if (litValue(lits[0]) == 0) {
          // conflict; keep remaining watchers in place
          for (size_t j = i + 1; j < list.size(); j++)
            list[keep++] = list[j];
          list.resize(keep);
          head_ = (int)trail_.size();
          return ci;
        }
        enqueue(lits[0], ci);
      }
      list.resize(keep);
    }
    return -1;
  }

  int analyze(int conflClause, std::vector<Lit>& learnt) {
    learnt.push_back(kUndefLit);  // slot for the asserting literal
    int counter = 0;
    Lit p = kUndefLit;
    int idx = (int)trail_.size() - 1;
    int ci = conflClause;
    do {
      const Clause& c = clauses_[ci];
      const Lit* lits = pool_.data() + c.start;
      for (int j = (p == kUndefLit ? 0 : 1); j < c.size; j++) {
        Lit q = lits[j];
        int v = litVar(q);
        if (!seen_[v] && level_[v] > 0) {
          seen_[v] = true;
          if (level_[v] == decisionLevel())
            counter++;
          else
            learnt.push_back(q);
        }
      }
      while (!seen_[litVar(trail_[idx])])
        idx--;
      p = trail_[idx--];
      seen_[litVar(p)] = false;
      counter--;
      ci = reason_[litVar(p)];
    } while (counter > 0);
    learnt[0] = negate(p);

    int backLevel = 0;
    int maxAt = 1;
    for (int i = 1; i < (int)learnt.size(); i++) {
      seen_[litVar(learnt[i])] = false;
      if (level_[litVar(learnt[i])] > backLevel) {
        backLevel = level_[litVar(learnt[i])];
        maxAt = i;
      }
    }
    if ((int)learnt.size() > 1)
      std::swap(learnt[1], learnt[maxAt]);
    return backLevel;
  }

  void backtrack(int toLevel) {
    if (decisionLevel() <= toLevel)
      return;
    int limit = trailLim_[toLevel];
    for (int i = (int)trail_.size() - 1; i >= limit; i--)
      assigns_[litVar(trail_[i])] = -1;
    trail_.resize(limit);
    trailLim_.resize(toLevel);
    head_ = limit;
  }

  int pickBranchVar() const {
    for (int v = 0; v < numVars_; v++)
      if (assigns_[v] < 0)
        return v;
    return -1;
  }

  int numVars_;
  bool contradiction_ = false;
  std::vector<int8_t> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<bool> seen_;
  std::vector<Clause> clauses_;
  std::vector<Lit> pool_;
  std::vector<std::vector<int>> watches_;
  std::vector<Lit> trail_;
  std::vector<int> trailLim_;
  int head_ = 0;
  long long conflicts_ = 0;
  static constexpr long long restartBase_ = 256;
};

}  // namespace

SatResult solveCnf(const CnfInstance& cnf, std::optional<std::chrono::milliseconds> timeLimit) {
  Solver solver(cnf);
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (timeLimit)
    deadline = std::chrono::steady_clock::now() + *timeLimit;
  SatResult result;
  result.status = solver.solve(deadline);
  if (result.status == SatStatus::Sat) {
    result.model.value = solver.model();
    if (!result.model.satisfies(cnf))
      fail(ErrorCode::ConstructionFailed, "solver returned a non-model");
  }
  return result;
}

}  // namespace linlay
