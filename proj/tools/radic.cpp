#include "radic/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return radic::cli::run(argc, argv, std::cout, std::cerr);
}
