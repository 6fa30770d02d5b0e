#include <iostream>
#include <string>
#include <vector>

#include "pilegame/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pilegame::cli::run(args, std::cout, std::cerr);
}
