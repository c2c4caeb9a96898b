#include <iostream>
#include <string>
#include <vector>

#include "maggraph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return maggraph::cli::dispatch(args, std::cout, std::cerr, std::cin);
}
