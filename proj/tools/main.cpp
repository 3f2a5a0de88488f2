#include <iostream>
#include <string>
#include <vector>

#include "framelat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return framelat::run(args, std::cout, std::cerr);
}
