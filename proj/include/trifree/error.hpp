#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trifree {

enum class ErrorCode {
  // embedding
  kAsymmetricRotation,
  kDuplicateEdge,
  kSelfLoop,
  kNonPlanarEmbedding,
  kDeadDart,
  kDeadVertex,
  kDifferentFaces,
  kSameOrigin,
  kNotIsolated,
  kBothBig,
  kDegreeCapExceeded,
  kNotSameFace,
  kAdjacentEndpoints,
  kEmbeddingCorruption,
  // reducer
  kInsecureMultigram,
  kExtensionFailure,
  // solver
  kTriangleFound,
  kExhaustedQueueNonempty,
  kNotAFacialCycle,
  kImproperPrecoloring,
  // oracle
  kTooLarge,
  // io / generators
  kSyntaxError,
  kInvalidSpec,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the 1-based line number of the offending input line.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace trifree
