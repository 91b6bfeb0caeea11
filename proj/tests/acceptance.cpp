// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>

#include "wpl/acceptance.hpp"

int main() {
    wpl::AcceptanceOptions options;
    options.window = wpl::rigidity_window_from_env();
    int failed = 0;
    for (int id = 1; id <= wpl::criterion_count; ++id) {
        const wpl::CriterionResult r = wpl::run_criterion(id, options);
        const char* verdict = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
        std::printf("[%s] criterion %2d %-20s %9.1f ms  %s\n", verdict, r.id, r.name.c_str(), r.ms, r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    }
    std::printf("%d of %d criteria failed\n", failed, wpl::criterion_count);
    return failed == 0 ? 0 : 1;
}
