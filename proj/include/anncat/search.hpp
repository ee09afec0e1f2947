#pragma once

#include <cstdint>
#include <vector>

#include "anncat/finite_algebra.hpp"
#include "anncat/parallel.hpp"
#include "anncat/presentation.hpp"

namespace anncat {

struct SearchCaps {
    std::uint64_t max_candidates = std::uint64_t{1} << 20;
};

struct ValidPair {
    std::vector<int> lambda;
    std::vector<int> eta;

    bool operator==(const ValidPair&) const = default;
};

struct SearchResult {
    std::uint64_t candidates = 0;
    std::vector<ValidPair> valid; // in candidate (lexicographic table) order
};

// Enumerates every (lambda, eta) pair over the given ring and bimodule and
// keeps those whose presentation passes check_axioms. The candidate order is
// lexicographic over the concatenated lambda|eta table, so the result is
// deterministic regardless of execution mode or worker count. Throws
// capacity_error when |M|^(|R|^3 + |R|^2) exceeds the cap.
SearchResult search_presentations(const FiniteRing& r, const Bimodule& m,
                                  const SearchCaps& caps = {}, const ExecPolicy& pol = {});

} // namespace anncat
