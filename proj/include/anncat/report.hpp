#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace anncat {

// Outcome of exhaustively evaluating one coherence family. `witness` is the
// lexicographically first failing tuple (object indices first, then label
// indices for families quantified over morphism labels); `lhs`/`rhs` are the
// two unequal composite labels found there. Existence-style families use
// lhs=1, rhs=0 as the failure marker.
struct FamilyResult {
    std::string name;
    std::string group;
    std::uint64_t tuples = 0;
    std::uint64_t failures = 0;
    std::vector<int> witness;
    int lhs = -1;
    int rhs = -1;

    bool pass() const { return failures == 0; }
};

struct AxiomReport {
    std::vector<FamilyResult> families;

    // Informational: eta(x, x) per object, for inspection. The axiom families
    // do not constrain the diagonal beyond involutivity, so it is recorded
    // rather than judged. Filled by check_axioms only.
    std::vector<int> eta_diagonal;

    bool pass() const {
        for (const auto& f : families)
            if (!f.pass()) return false;
        return true;
    }

    const FamilyResult* find(std::string_view name) const {
        for (const auto& f : families)
            if (f.name == name) return &f;
        return nullptr;
    }

    std::uint64_t total_failures() const {
        std::uint64_t s = 0;
        for (const auto& f : families) s += f.failures;
        return s;
    }
};

} // namespace anncat
