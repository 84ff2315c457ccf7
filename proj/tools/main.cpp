#include <iostream>
#include <string>
#include <vector>

#include "cubext/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return cubext::run(args, std::cout, std::cerr);
}
