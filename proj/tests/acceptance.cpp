// Acceptance suite: runs every verification criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 5 if any fail.

#include <iostream>

#include "specgraph/verification.hpp"

int main() {
    auto results = specgraph::run_acceptance_criteria(&std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    std::cout << "----\n"
              << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 5;
}
