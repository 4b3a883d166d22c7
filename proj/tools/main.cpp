// Copyright 2026 The edgewire Authors
// SPDX-License-Identifier: Apache-2.0

#include "edgewire/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return edgewire::run_cli(argc, argv, std::cout, std::cerr); }
