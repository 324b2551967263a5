#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "acx4/invariants.hpp"
#include "acx4/multifan.hpp"
#include "acx4/reduce.hpp"
#include "acx4/torusgraph.hpp"

namespace acx4 {

inline constexpr std::string_view kFansFormat = "acx4-fans/1";
inline constexpr std::string_view kGraphFormat = "acx4-graph/1";
inline constexpr std::string_view kLogFormat = "acx4-log/1";
inline constexpr std::string_view kReportFormat = "acx4-report/1";

using Payload = std::variant<MultiFanFamily, TorusGraph, MoveLog, ChiYReport>;

struct Document {
  Payload payload;

  std::string_view format() const;
  friend bool operator==(const Document&, const Document&) = default;
};

/// Parses any of the four formats. Malformed JSON or structure raises
/// ParseError naming the byte offset or field path (e.g. fans[0].vectors[1]);
/// an unrecognised "format" raises UnknownFormat. Well-formed but
/// inadmissible content raises the validator's own error.
///
/// Coordinates are JSON integers or decimal strings (used for values beyond
/// 2^53 - 1). Inside a log, "initial" and "final" are family objects whose
/// "format" member is optional.
Document parse_document(std::string_view text);

/// Compact single-line JSON followed by a newline. parse_document inverts it.
std::string emit_document(const Document& doc);

}  // namespace acx4
