#include <iostream>
#include <vector>

#include "dempoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dempoly::dispatch(args, std::cout, std::cerr);
}
