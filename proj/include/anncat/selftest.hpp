#pragma once

#include <string>
#include <vector>

#include "anncat/parallel.hpp"

namespace anncat {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    double wall_ms = 0.0;
    std::string detail;
};

struct SelftestResult {
    std::vector<CriterionResult> criteria;

    bool pass() const {
        for (const auto& c : criteria)
            if (!c.pass) return false;
        return true;
    }
};

// The built-in acceptance battery. Every threshold (fixture list, expected
// counts, runtime bounds) is pinned here.
SelftestResult run_selftest(const ExecPolicy& pol = {});

} // namespace anncat
