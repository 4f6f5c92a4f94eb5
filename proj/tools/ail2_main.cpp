#include <iostream>
#include <string>
#include <vector>

#include "ail2/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ail2::cli::dispatch(std::move(args), std::cout, std::cerr);
}
