#include "gsig/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return gsig::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
