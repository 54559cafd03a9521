#include <iostream>
#include <string>
#include <vector>

#include "osee/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return osee::run_cli(args, std::cout, std::cerr);
}
