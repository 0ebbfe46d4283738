#include "sset/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return sset::cli::run(argc, argv, std::cout, std::cerr);
}
