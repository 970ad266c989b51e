#include <iostream>

#include "bundlefd_cli/cli.hpp"

int main(int argc, char** argv) { return bundlefd::cli::cli_main(argc, argv, std::cout, std::cerr); }
