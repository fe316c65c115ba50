#include "mtree/error.hpp"

namespace mtree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyTree: return "EmptyTree";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNonpositiveEdgeLength: return "NonpositiveEdgeLength";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kForeignPoint: return "ForeignPoint";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kInvalidMatrix: return "InvalidMatrix";
    case ErrorCode::kNotAMetric: return "NotAMetric";
    case ErrorCode::kNotTreeMetric: return "NotTreeMetric";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kInvalidName: return "InvalidName";
    case ErrorCode::kUnknownPoint: return "UnknownPoint";
    case ErrorCode::kUnknownGallery: return "UnknownGallery";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kNegativeRadius: return "NegativeRadius";
    case ErrorCode::kNegativeDiameter: return "NegativeDiameter";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kNotIsometric: return "NotIsometric";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::size_t> indices)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      indices_(std::move(indices)) {}

SyntaxError::SyntaxError(const std::string& message, std::size_t line,
                         std::size_t column)
    : Error(ErrorCode::kSyntaxError,
            "line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace mtree
