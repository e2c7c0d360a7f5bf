// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <vector>

#include "depthlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return depthlab::cli::run(std::move(args), std::cout, std::cerr);
}
