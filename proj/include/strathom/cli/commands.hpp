#pragma once

#include <ostream>

namespace strathom::cli {

enum ExitCode { kOk = 0, kUsage = 1, kValidation = 2, kCheckFailure = 3 };

/// Entry point of the strathom tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace strathom::cli
