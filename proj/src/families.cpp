#include "families.hpp"

#include <span>

#include "anncat/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace anncat {

namespace {

constexpr int kMaxArity = 8;

} // namespace

FamilyResult scan_family(const Family& fam, const ExecPolicy& pol) {
    std::uint64_t total = 1;
    for (int d : fam.dims) total *= static_cast<std::uint64_t>(d);

    FamilyResult res;
    res.name = fam.name;
    res.group = fam.group;
    res.tuples = total;

    std::uint64_t failures = 0;
    long long first = static_cast<long long>(total);
    const long long n = static_cast<long long>(total);

    bool parallel = pol.mode == ExecMode::parallel;
#ifndef _OPENMP
    parallel = false;
#endif

    if (parallel) {
#ifdef _OPENMP
        const int threads = pol.workers > 0 ? pol.workers : omp_get_max_threads();
#pragma omp parallel for num_threads(threads) schedule(static) \
    reduction(+ : failures) reduction(min : first)
        for (long long i = 0; i < n; ++i) {
            int tuple[kMaxArity];
            decode_tuple(static_cast<std::uint64_t>(i), fam.dims, tuple);
            auto [lhs, rhs] = fam.eval(tuple);
            if (lhs != rhs) {
                ++failures;
                if (i < first) first = i;
            }
        }
#endif
    } else {
        for (long long i = 0; i < n; ++i) {
            int tuple[kMaxArity];
            decode_tuple(static_cast<std::uint64_t>(i), fam.dims, tuple);
            auto [lhs, rhs] = fam.eval(tuple);
            if (lhs != rhs) {
                ++failures;
                if (i < first) first = i;
            }
        }
    }

    res.failures = failures;
    if (failures > 0) {
        int tuple[kMaxArity];
        decode_tuple(static_cast<std::uint64_t>(first), fam.dims, tuple);
        res.witness.assign(tuple, tuple + fam.dims.size());
        auto [lhs, rhs] = fam.eval(tuple);
        res.lhs = lhs;
        res.rhs = rhs;
    }
    return res;
}

AxiomReport scan_families(const std::vector<Family>& fams, const ExecPolicy& pol) {
    AxiomReport report;
    report.families.reserve(fams.size());
    for (const auto& fam : fams) report.families.push_back(scan_family(fam, pol));
    return report;
}

std::pair<int, int> eval_family_at(const std::vector<Family>& fams, std::string_view name,
                                   std::span<const int> tuple) {
    for (const auto& fam : fams) {
        if (fam.name != name) continue;
        if (tuple.size() != fam.dims.size())
            throw error("tuple arity mismatch for family " + fam.name);
        int buf[kMaxArity];
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] < 0 || tuple[i] >= fam.dims[i])
                throw error("tuple entry out of range for family " + fam.name);
            buf[i] = tuple[i];
        }
        return fam.eval(buf);
    }
    throw error("unknown family: " + std::string(name));
}

} // namespace anncat
