#include <iostream>

#include "arpaforge/lp.hpp"

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::cout << arpaforge::gamma(6, 2, 2).str() << "\n";
    return 0;
}
