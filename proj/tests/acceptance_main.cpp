#include <iostream>

#include "wb/workbench.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : WB_RINGS_DIR;
    bool ok = wb::run_acceptance(dir, std::cout);
    return ok ? 0 : 1;
}
