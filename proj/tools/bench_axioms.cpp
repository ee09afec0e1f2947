// Compares the flat-table axiom kernels (serial and OpenMP) against the
// morphism-folding reference on strict Z_n presentations, and checks that all
// three produce identical reports.

#include <chrono>
#include <cstdio>

#include "anncat/presentation.hpp"

using namespace anncat;

namespace {

AnnPresentation strict_zn(int n) {
    FiniteRing r = make_zn(n);
    Bimodule m = regular_bimodule(r);
    return from_rm(r, m, std::vector<int>(static_cast<std::size_t>(n) * n * n, 0),
                   std::vector<int>(static_cast<std::size_t>(n) * n, 0));
}

template <class F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

bool same(const AxiomReport& a, const AxiomReport& b) {
    if (a.families.size() != b.families.size()) return false;
    for (std::size_t i = 0; i < a.families.size(); ++i) {
        const auto& x = a.families[i];
        const auto& y = b.families[i];
        if (x.name != y.name || x.failures != y.failures || x.witness != y.witness) return false;
    }
    return true;
}

} // namespace

int main() {
    std::printf("%6s %14s %14s %14s %8s\n", "n", "reference(ms)", "kernel-1t(ms)",
                "kernel-omp(ms)", "agree");
    for (int n : {4, 6, 8, 12, 16}) {
        AnnPresentation p = strict_zn(n);
        AxiomReport ref, ser, par;
        double t_ref = time_ms([&] { ref = check_axioms_reference(p); });
        double t_ser = time_ms([&] { ser = check_axioms(p, serial_policy()); });
        double t_par = time_ms([&] { par = check_axioms(p); });
        bool agree = same(ref, ser) && same(ser, par);
        std::printf("%6d %14.2f %14.2f %14.2f %8s\n", n, t_ref, t_ser, t_par,
                    agree ? "yes" : "NO");
        if (!agree) return 1;
    }
    return 0;
}
