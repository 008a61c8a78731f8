#include <iostream>

#include "deid/cli/commands.hpp"

int main(int argc, char** argv) {
    return deid::cli::run(argc, argv, std::cout, std::cerr);
}
