#include <iostream>
#include <string>
#include <vector>

#include "ghk/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return ghk::cli::run(args, std::cout, std::cerr);
}
