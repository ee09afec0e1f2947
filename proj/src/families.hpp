#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anncat/parallel.hpp"
#include "anncat/report.hpp"

namespace anncat {

// One coherence family: a tuple space (extents in `dims`, lexicographic order,
// first slot most significant) and an evaluator returning the two composite
// labels at a tuple. A tuple fails when the labels differ.
struct Family {
    std::string name;
    std::string group;
    std::vector<int> dims;
    std::function<std::pair<int, int>(const int*)> eval;
};

inline void decode_tuple(std::uint64_t flat, const std::vector<int>& dims, int* out) {
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        out[k] = static_cast<int>(flat % dims[k]);
        flat /= dims[k];
    }
}

// Scans the whole tuple space. The first witness is the lexicographically
// least failing tuple regardless of execution mode or worker count.
FamilyResult scan_family(const Family& fam, const ExecPolicy& pol);

AxiomReport scan_families(const std::vector<Family>& fams, const ExecPolicy& pol);

// Single-tuple re-evaluation by family name; throws anncat::error if the name
// or tuple shape is unknown.
std::pair<int, int> eval_family_at(const std::vector<Family>& fams, std::string_view name,
                                   std::span<const int> tuple);

} // namespace anncat
