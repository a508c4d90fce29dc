#include <iostream>
#include <vector>

#include "homkit/report.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return homkit::run_cli(args, std::cout, std::cerr);
}
