// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace depthlab::cli {

/// Runs one CLI invocation (args exclude the program name). Returns the
/// process exit code: 0 success, 2 usage/config error, 3 data error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace depthlab::cli
