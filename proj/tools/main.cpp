#include <iostream>
#include <string>
#include <vector>

#include "spansub/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spansub::run_cli(args, std::cout, std::cerr);
}
