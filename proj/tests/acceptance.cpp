#include <cstdio>

#include "twoside/selftest.hpp"

int main() {
    int failed = 0;
    for (int id = 1; id <= twoside::kCriteria; ++id) {
        twoside::CriterionResult r = twoside::run_criterion(id);
        std::printf("criterion %2d %s  %s (%.1f s)%s%s\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                    r.pass ? "" : ": ", r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
