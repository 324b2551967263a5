#pragma once

#include <ostream>

namespace acx4 {

/// Runs the acx4 command line. Returns 0 on success, 1 on a validation or
/// domain error (diagnostic on err), 2 on a usage error. Never throws.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace acx4
