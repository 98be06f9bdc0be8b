#include <iostream>

#include "branch_audit/cli.hpp"

int main(int argc, char** argv) { return branch_audit::run_cli(argc, argv, std::cout, std::cerr); }
