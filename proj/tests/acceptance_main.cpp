#include <iostream>

#include "motifscope/acceptance.hpp"

int main() {
    auto results = motifscope::run_acceptance(std::cout);
    return motifscope::all_passed(results) ? 0 : 1;
}
