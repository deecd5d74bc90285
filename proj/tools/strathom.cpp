#include <iostream>

#include "strathom/cli/commands.hpp"

int main(int argc, char** argv) { return strathom::cli::run(argc, argv, std::cout, std::cerr); }
