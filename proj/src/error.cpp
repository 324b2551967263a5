#include "acx4/error.hpp"

namespace acx4 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNotABasis: return "NotABasis";
    case ErrorCode::kOrientationFlip: return "OrientationFlip";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotBlowDownable: return "NotBlowDownable";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kNotTwoRegular: return "NotTwoRegular";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kMultiEdge: return "MultiEdge";
    case ErrorCode::kWeightsNotBasis: return "WeightsNotBasis";
    case ErrorCode::kRecurrenceFails: return "RecurrenceFails";
    case ErrorCode::kZeroLabel: return "ZeroLabel";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kMoveInapplicable: return "MoveInapplicable";
    case ErrorCode::kNotToddOne: return "NotToddOne";
    case ErrorCode::kNonPositiveInput: return "NonPositiveInput";
    case ErrorCode::kNotRealizable: return "NotRealizable";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownFormat: return "UnknownFormat";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(message),
      index_(index) {}

void internal_inconsistency(const std::string& what) {
  throw Error(ErrorCode::kInternalInconsistency, what);
}

}  // namespace acx4
