#include <iostream>
#include <string>
#include <vector>

#include "brk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return brkit::brk_main(std::move(args), std::cout, std::cerr);
}
