#include <iostream>
#include <string>
#include <vector>

#include "locyc/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return locyc::cli::run(args, std::cout, std::cerr);
}
