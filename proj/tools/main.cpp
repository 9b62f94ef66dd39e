#include <stablehit/cli.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::ios::sync_with_stdio(false);
    return stablehit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
