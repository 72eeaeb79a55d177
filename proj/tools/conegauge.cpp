#include <iostream>

#include "conegauge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return conegauge::cli::run(args, std::cout, std::cerr);
}
