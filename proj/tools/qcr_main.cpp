#include <iostream>
#include <string>
#include <vector>

#include "qcr/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qcr::dispatch(args, std::cout, std::cerr);
}
