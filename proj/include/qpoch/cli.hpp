// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>

namespace qpoch {

/// Command-line entry point. Subcommands: eval, verify, expand, sweep,
/// estimate. Exit codes: 0 success, 1 usage error, 2 DomainError,
/// 3 PrecisionError or ConvergenceError.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpoch
