#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mtree {

enum class ErrorCode {
  kEmptyTree,
  kUnknownNode,
  kUnknownEdge,
  kCycleDetected,
  kDisconnected,
  kNonpositiveEdgeLength,
  kDuplicateEdge,
  kForeignPoint,
  kParameterOutOfRange,
  kTooFewPoints,
  kInvalidMatrix,
  kNotAMetric,
  kNotTreeMetric,
  kSyntaxError,
  kDuplicateName,
  kInvalidName,
  kUnknownPoint,
  kUnknownGallery,
  kBadParams,
  kEmptySet,
  kNegativeRadius,
  kNegativeDiameter,
  kTooLargeForOracle,
  kNotIsometric,
  kDuplicatePoint,
  kPreconditionViolation,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported through this exception. `indices()`
/// carries the offending element indices when the failure has a witness
/// (a violating triple, quadruple or pair).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::size_t> indices = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mtree
