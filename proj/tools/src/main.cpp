// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "pgrade_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* env = std::getenv("GRADE_TOL");
  return pgrade::cli::run(args, std::cout, std::cerr, env ? env : "");
}
