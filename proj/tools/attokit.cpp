#include "attokit/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return attokit::cli::run(std::move(args), std::cout, std::cerr);
}
