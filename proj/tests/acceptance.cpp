// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Runs the library verification suites at their pinned depths and bounds.

#include <chrono>
#include <cstdio>
#include <string>

#include "hyprv/verify.hpp"

using namespace hyprv;

namespace {

struct Criterion {
    std::string label;
    std::string suite;
    VerifyConfig cfg;
    double time_limit_s;
};

bool run_criterion(const Criterion& c, int index) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport report = run_suite(c.suite, c.cfg);
    auto t1 = std::chrono::steady_clock::now();
    double elapsed = std::chrono::duration<double>(t1 - t0).count();

    bool pass = report.all_pass();
    bool in_time = elapsed < c.time_limit_s;
    std::printf("[%s] %d. %s (%zu checks, %.2f s, limit %.0f s)\n",
                pass && in_time ? "PASS" : "FAIL", index, c.label.c_str(), report.checks.size(), elapsed,
                c.time_limit_s);
    if (!pass)
        for (const CheckResult& r : report.checks)
            if (!r.pass) std::printf("       failed: %s - %s\n", r.name.c_str(), r.detail.c_str());
    if (!in_time) std::printf("       exceeded the time limit\n");
    return pass && in_time;
}

}  // namespace

int main() {
    VerifyConfig base;
    base.seed = 1;

    VerifyConfig structure = base;
    structure.d_max = 8;
    VerifyConfig cocycle = base;
    cocycle.d_max = 8;
    VerifyConfig group = base;
    group.d_max = 7;
    group.random_words = 1000;
    group.word_len = 20;
    VerifyConfig orbit = base;
    orbit.d_max = 5;
    orbit.radius = 3;
    VerifyConfig decomp = base;
    decomp.d_max = 5;
    decomp.decompose_words = 200;
    decomp.word_len = 20;

    Criterion criteria[] = {
        {"structure suite: BFS = recursion, |R_d| = 2^{d-1}-1, recursion relations, 2 <= d <= 8", "structure",
         structure, 10.0},
        {"cocycle suite: loop closed forms (all stages), L_winner identification, abelianization, 2 <= d <= 8",
         "cocycle", cocycle, 30.0},
        {"group suite: mod-2 closure order (d+1)!, 1000 random words per d <= 7, h* line for odd d", "group",
         group, 60.0},
        {"orbit suite: exhaustive sup-norm <= 3 sweep, certificates exactly on the predicate set, d <= 5",
         "orbit", orbit, 300.0},
        {"decomposition suite: 200 random-word round trips per d <= 5, translation matrices M/N",
         "decompose", decomp, 300.0},
        {"appendix suite: reference A/B, J invariance, exact eigenvalues, T and T^2 tables, charpoly identity",
         "appendix", base, 10.0},
    };

    bool all = true;
    int index = 1;
    for (const Criterion& c : criteria) all = run_criterion(c, index++) && all;
    std::printf("%s\n", all ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
    return all ? 0 : 1;
}
