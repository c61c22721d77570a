#include <iostream>

#include "irdom/cli.hpp"

auto main(int argc, char **argv) -> int
{
    return irdom::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
