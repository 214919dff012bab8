// One line per acceptance criterion; nonzero exit if any criterion fails or
// exceeds its time limit.

#include <iostream>

#include "mplkz/suite.hpp"

int main() {
    mplkz::SuiteOptions options;
    bool all = true;
    for (int n = 1; n <= mplkz::kCriterionCount; ++n) {
        const mplkz::CriterionResult r = mplkz::run_criterion(n, options);
        std::cout << mplkz::to_text(r) << std::endl;
        for (const auto& rep : r.reports) std::cout << "      " << mplkz::to_text(rep) << "\n";
        all = all && r.ok();
    }
    std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
    return all ? 0 : 1;
}
