#include <iostream>

#include "xlmhg/cli.hpp"

int main(int argc, char** argv) {
    return xlmhg::cli::run(argc, argv, std::cout, std::cerr);
}
