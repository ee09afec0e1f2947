// Acceptance suite: runs every built-in criterion and prints one pass/fail
// line per criterion. Exit status 0 iff all pass.

#include <cstdio>

#include "anncat/selftest.hpp"

int main() {
    anncat::SelftestResult res = anncat::run_selftest({});
    for (const auto& c : res.criteria) {
        std::printf("[%s] %s %s (%.1f ms)%s%s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(),
                    c.title.c_str(), c.wall_ms, c.detail.empty() ? "" : " -- ",
                    c.detail.c_str());
    }
    std::printf("%s: %zu criteria\n", res.pass() ? "ALL PASS" : "FAILURES PRESENT",
                res.criteria.size());
    return res.pass() ? 0 : 1;
}
