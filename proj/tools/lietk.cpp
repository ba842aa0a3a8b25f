#include "lietk/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
    std::ios::sync_with_stdio(false);
    return lietk::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
