// Runs every acceptance criterion at full size and prints one line per criterion.
#include <cstdio>

#include "pvc/reproduce.hpp"

int main() {
    bool all = true;
    for (int id = 1; id <= pvc::kCriterionCount; ++id) {
        const pvc::CriterionResult r = pvc::run_criterion(id);
        std::printf("[%s] criterion %2d: %s: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.summary.c_str(), r.seconds);
        if (!r.passed) {
            for (const auto& f : r.details["failures"]) std::printf("       %s\n", f.get<std::string>().c_str());
        }
        std::fflush(stdout);
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
