#include "runlz/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return runlz::cli::run(args, std::cin, std::cout, std::cerr);
}
