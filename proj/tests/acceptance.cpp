// One acceptance criterion per invocation: `acceptance N` prints a single
// PASS/FAIL line followed by the itemized checks.

#include <cstdio>
#include <iostream>
#include <string>

#include "ptl/suite/acceptance.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance CRITERION\n";
        return 2;
    }
    try {
        ptl::FixtureBundle fx;
        auto r = ptl::run_criterion(std::stoi(argv[1]), fx);
        std::cout << ptl::summary_line(r) << "\n";
        for (auto& a : r.anchors) std::cout << "    anchor " << a << "\n";
        for (auto& d : r.details) std::cout << "    " << d << "\n";
        return r.pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "acceptance: " << e.what() << "\n";
        return 2;
    }
}
