#include <iostream>
#include <string>
#include <vector>

#include "nht/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nht::cli::run_command(args, std::cout, std::cerr).exit_status;
}
