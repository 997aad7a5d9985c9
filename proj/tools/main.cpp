#include <iostream>
#include <string>
#include <vector>

#include "f2alg/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return f2alg::cli::run(args, std::cout, std::cerr);
}
