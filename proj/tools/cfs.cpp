#include <iostream>

#include "cfs/cli.hpp"

int main(int argc, char** argv) {
    return cfs::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
