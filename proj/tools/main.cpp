// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The cmix Authors

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cmix::cli::run(args, std::cout, std::cerr);
}
