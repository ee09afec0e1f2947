#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "anncat/errors.hpp"
#include "anncat/finite_algebra.hpp"
#include "anncat/parallel.hpp"
#include "anncat/report.hpp"

namespace anncat {

// Presented almost-strict Ann-category. Objects form a finite ring (add = the
// sum of objects, mul = the tensor of objects, zero/one = the distinguished
// objects); every hom-set is {X} x labels with composition = label addition.
// Only the commutativity constraint (eta) and the left distributivity
// constraint (lambda) carry nonzero labels; all other constraints are
// identities and live in the object tables.
struct AnnPresentation {
    FiniteRing objs;
    AbelianGroup labels;
    std::vector<int> lact; // objs.n * labels.n, label transport for X (x) -
    std::vector<int> ract; // objs.n * labels.n, label transport for - (x) X
    std::vector<int> lambda; // objs.n^3 row-major
    std::vector<int> eta;    // objs.n^2 row-major

    int left(int x, int a) const { return lact[static_cast<std::size_t>(x) * labels.n + a]; }
    int right(int x, int a) const { return ract[static_cast<std::size_t>(x) * labels.n + a]; }
    int lam(int a, int x, int y) const {
        return lambda[(static_cast<std::size_t>(a) * objs.n + x) * objs.n + y];
    }
    int et(int x, int y) const { return eta[static_cast<std::size_t>(x) * objs.n + y]; }

    bool operator==(const AnnPresentation&) const = default;
};

// Endomorphism (X, a): X -> X with label a.
struct Mor {
    int obj = 0;
    int lab = 0;

    bool operator==(const Mor&) const = default;
};

// Builds the type-(R, M) presentation. The module must live over exactly the
// given ring; lambda/eta are flat row-major tables of label indices. Validates
// structure only; the coherence diagrams are the business of check_axioms.
AnnPresentation from_rm(const FiniteRing& r, const Bimodule& m, std::vector<int> lambda,
                        std::vector<int> eta);

// Same assembly from flat tables, for callers that already hold validated
// parts (the dual builder, the search loop).
AnnPresentation assemble_presentation(FiniteRing objs, AbelianGroup labels, std::vector<int> lact,
                                      std::vector<int> ract, std::vector<int> lambda,
                                      std::vector<int> eta);

// Structural invariants of an assembled presentation (object ring laws, label
// group laws, action laws, table sizes). Throws validation_error.
void validate_presentation(const AnnPresentation& p);

Mor compose(const AnnPresentation& p, const Mor& f, const Mor& g); // f after g
Mor oplus_mor(const AnnPresentation& p, const Mor& f, const Mor& g);
Mor otimes_mor(const AnnPresentation& p, const Mor& f, const Mor& g);
Mor inverse_mor(const AnnPresentation& p, const Mor& f);
Mor identity_mor(const AnnPresentation& p, int obj);

// The canonical middle swap (U+V)+(Z+T) -> (U+Z)+(V+T); with strict
// associativity its label is eta(V, Z).
Mor build_v(const AnnPresentation& p, int u, int v, int z, int t);

// Exhaustive evaluation of the defining coherence diagrams, one family per
// report entry. check_axioms uses flat table kernels (OpenMP-parallel under
// ExecMode::parallel); the _reference variants re-evaluate every diagram by
// folding compose/oplus_mor/otimes_mor over its edges, serially. Both produce
// identical reports.
AxiomReport check_axioms(const AnnPresentation& p, const ExecPolicy& pol = {});
AxiomReport check_axioms_reference(const AnnPresentation& p);

// Braiding candidate c: objs^2 -> labels, flat row-major.
AxiomReport check_braiding(const AnnPresentation& p, const std::vector<int>& braid,
                           const ExecPolicy& pol = {});
AxiomReport check_braiding_reference(const AnnPresentation& p, const std::vector<int>& braid);

// Re-evaluates one family at one tuple; a recorded witness must reproduce its
// inequality.
std::pair<int, int> reevaluate_axiom(const AnnPresentation& p, std::string_view family,
                                     std::span<const int> tuple);
std::pair<int, int> reevaluate_braiding(const AnnPresentation& p, const std::vector<int>& braid,
                                        std::string_view family, std::span<const int> tuple);

// Raised when an operation requires a presentation that passes check_axioms
// and it does not; carries the failing report.
struct axiom_failure : error {
    AxiomReport report;

    axiom_failure(const std::string& msg, AxiomReport r) : error(msg), report(std::move(r)) {}
};

// Invariants of the presented category, packaged for the finite-algebra
// validators. Both insist on a passing check_axioms first.
FiniteRing pi0(const AnnPresentation& p, const ExecPolicy& pol = {});
Bimodule pi1(const AnnPresentation& p, const ExecPolicy& pol = {});

} // namespace anncat
