#include "anncat/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace anncat {

SearchResult search_presentations(const FiniteRing& r, const Bimodule& m, const SearchCaps& caps,
                                  const ExecPolicy& pol) {
    if (!(m.base == r))
        throw validation_error("base-mismatch", {}, "module is not a bimodule over the given ring");
    const int n = r.n;
    const int k = m.grp.n;
    const std::size_t lam_len = static_cast<std::size_t>(n) * n * n;
    const std::size_t eta_len = static_cast<std::size_t>(n) * n;
    const double est = std::pow(static_cast<double>(k),
                                static_cast<double>(lam_len + eta_len));
    if (est > static_cast<double>(caps.max_candidates))
        throw capacity_error("(lambda, eta) search would visit about " + std::to_string(est) +
                                 " candidates (cap " + std::to_string(caps.max_candidates) + ")",
                             est);
    const std::uint64_t total = static_cast<std::uint64_t>(est + 0.5);

    AnnPresentation base;
    base.objs = r;
    base.labels = m.grp;
    base.lact = m.lact;
    base.ract = m.ract;
    base.lambda.assign(lam_len, m.grp.zero);
    base.eta.assign(eta_len, m.grp.zero);

    auto fill_tables = [&](AnnPresentation& p, std::uint64_t c) {
        // Lexicographic: the first lambda entry is the most significant digit.
        for (std::size_t i = eta_len; i-- > 0;) {
            p.eta[i] = static_cast<int>(c % k);
            c /= k;
        }
        for (std::size_t i = lam_len; i-- > 0;) {
            p.lambda[i] = static_cast<int>(c % k);
            c /= k;
        }
    };

    std::vector<std::uint64_t> hits;

    bool parallel = pol.mode == ExecMode::parallel;
#ifndef _OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef _OPENMP
        const int threads = pol.workers > 0 ? pol.workers : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
        {
            AnnPresentation p = base;
            std::vector<std::uint64_t> local;
#pragma omp for schedule(static)
            for (long long c = 0; c < static_cast<long long>(total); ++c) {
                fill_tables(p, static_cast<std::uint64_t>(c));
                if (check_axioms(p, serial_policy()).pass())
                    local.push_back(static_cast<std::uint64_t>(c));
            }
#pragma omp critical
            hits.insert(hits.end(), local.begin(), local.end());
        }
#endif
    } else {
        AnnPresentation p = base;
        for (std::uint64_t c = 0; c < total; ++c) {
            fill_tables(p, c);
            if (check_axioms(p, serial_policy()).pass()) hits.push_back(c);
        }
    }
    std::sort(hits.begin(), hits.end());

    SearchResult res;
    res.candidates = total;
    res.valid.reserve(hits.size());
    AnnPresentation p = base;
    for (std::uint64_t c : hits) {
        fill_tables(p, c);
        res.valid.push_back(ValidPair{p.lambda, p.eta});
    }
    return res;
}

} // namespace anncat
