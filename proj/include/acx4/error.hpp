#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace acx4 {

enum class ErrorCode {
  kPreconditionViolated,
  kTooShort,
  kZeroVector,
  kNotABasis,
  kOrientationFlip,
  kIndexOutOfRange,
  kNotBlowDownable,
  kEmptyFamily,
  kNotTwoRegular,
  kSelfLoop,
  kMultiEdge,
  kWeightsNotBasis,
  kRecurrenceFails,
  kZeroLabel,
  kUnknownVertex,
  kDuplicateVertex,
  kUnknownEdge,
  kMoveInapplicable,
  kNotToddOne,
  kNonPositiveInput,
  kNotRealizable,
  kParseError,
  kUnknownFormat,
  kInternalInconsistency,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported as an Error. The optional
// index names the first offending position (vector index, edge index, move
// index) when the failure has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  /// The message without the leading "Code: ".
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> index_;
};

// Raised only when an internal cross-check fails; never expected on valid input.
[[noreturn]] void internal_inconsistency(const std::string& what);

}  // namespace acx4
