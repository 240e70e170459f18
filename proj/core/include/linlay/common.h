#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace linlay {

// Endpoints are stored normalized, first < second.
using Edge = std::pair<int, int>;

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  MalformedHeader,
  TruncatedRecord,
  Disconnected,
  EdgeSetMismatch,
  ExceedsMax,
  CyclicOrder,
  EmbeddingInvalid,
  ConstructionFailed,
  BackendFailure,
  IoError,
  MalformedCorpus,
  BadArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline Edge makeEdge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

}  // namespace linlay
