// Runs the acceptance criteria, one PASS/FAIL line each; exit status 0 only when all pass.

#include <cstdlib>
#include <iostream>

#include "acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
    bool ok = true;
    for (auto& r : pw::run_acceptance(seed, pw::default_search_depth())) {
        std::cout << pw::summary_line(r) << std::endl;
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}
