// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgrade::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,  ///< malformed input file or command line
  kCeiling = 3,
  kVerification = 4,
};

/**
 * Runs one command line (without the program name) and returns its exit code.
 * `env_tol` is the value of GRADE_TOL, or empty when unset.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& env_tol = {});

}  // namespace pgrade::cli
