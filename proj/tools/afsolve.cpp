// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#include <iostream>
#include <string>
#include <vector>

#include "afsolve/cli.hpp"

int main(int argc, char* argv[]) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return afsolve::run_cli(args, std::cout, std::cerr);
}
