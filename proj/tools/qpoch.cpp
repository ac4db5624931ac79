// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "qpoch/cli.hpp"

int main(int argc, char** argv) { return qpoch::cli_main(argc, argv, std::cout, std::cerr); }
