#include <iostream>

#include "trialg/cli/commands.hpp"

int main(int argc, char** argv) { return trialg::run_cli(argc, argv, std::cout, std::cerr); }
