// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "tprh/cli.hpp"

int main(int argc, char** argv) { return tprh::cli::run(argc, argv, std::cout, std::cerr); }
