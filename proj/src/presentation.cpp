#include "anncat/presentation.hpp"

#include <string>

namespace anncat {

namespace {

void check_label_table(const std::vector<int>& t, std::size_t expected, int label_count,
                       const char* what) {
    if (t.size() != expected)
        throw validation_error("table-size", {},
                               std::string(what) + " table has " + std::to_string(t.size()) +
                                   " entries, expected " + std::to_string(expected));
    for (int v : t)
        if (v < 0 || v >= label_count)
            throw validation_error("entry-range", {v},
                                   std::string(what) + " entry out of label range");
}

} // namespace

AnnPresentation assemble_presentation(FiniteRing objs, AbelianGroup labels, std::vector<int> lact,
                                      std::vector<int> ract, std::vector<int> lambda,
                                      std::vector<int> eta) {
    AnnPresentation p;
    p.objs = std::move(objs);
    p.labels = std::move(labels);
    p.lact = std::move(lact);
    p.ract = std::move(ract);
    p.lambda = std::move(lambda);
    p.eta = std::move(eta);
    validate_presentation(p);
    return p;
}

void validate_presentation(const AnnPresentation& p) {
    const std::size_t n = static_cast<std::size_t>(p.objs.n);
    // Object level: ring laws encode the strict constraints (a+, g, d, a, l,
    // r, R and the x(x)O = O laws) plus Eq.-(1) invertibility.
    validate_ring_tables(p.objs.n, p.objs.add, p.objs.mul, p.objs.zero, p.objs.one);
    validate_group_tables(p.labels.n, p.labels.add, p.labels.zero);
    Bimodule actions{p.objs, p.labels, p.lact, p.ract};
    validate_bimodule_tables(actions);
    check_label_table(p.lambda, n * n * n, p.labels.n, "lambda");
    check_label_table(p.eta, n * n, p.labels.n, "eta");
}

AnnPresentation from_rm(const FiniteRing& r, const Bimodule& m, std::vector<int> lambda,
                        std::vector<int> eta) {
    if (!(m.base == r))
        throw validation_error("base-mismatch", {},
                               "module is not a bimodule over the given ring");
    return assemble_presentation(r, m.grp, m.lact, m.ract, std::move(lambda), std::move(eta));
}

Mor compose(const AnnPresentation& p, const Mor& f, const Mor& g) {
    if (f.obj != g.obj)
        throw validation_error("no-such-composite", {f.obj, g.obj},
                               "cannot compose morphisms at objects " + std::to_string(f.obj) +
                                   " and " + std::to_string(g.obj));
    return Mor{f.obj, p.labels.sum(f.lab, g.lab)};
}

Mor oplus_mor(const AnnPresentation& p, const Mor& f, const Mor& g) {
    return Mor{p.objs.plus(f.obj, g.obj), p.labels.sum(f.lab, g.lab)};
}

Mor otimes_mor(const AnnPresentation& p, const Mor& f, const Mor& g) {
    return Mor{p.objs.times(f.obj, g.obj),
               p.labels.sum(p.left(f.obj, g.lab), p.right(g.obj, f.lab))};
}

Mor inverse_mor(const AnnPresentation& p, const Mor& f) {
    return Mor{f.obj, p.labels.minus(f.lab)};
}

Mor identity_mor(const AnnPresentation& p, int obj) { return Mor{obj, p.labels.zero}; }

Mor build_v(const AnnPresentation& p, int u, int v, int z, int t) {
    const int obj = p.objs.plus(p.objs.plus(u, v), p.objs.plus(z, t));
    return Mor{obj, p.et(v, z)};
}

FiniteRing pi0(const AnnPresentation& p, const ExecPolicy& pol) {
    AxiomReport rep = check_axioms(p, pol);
    if (!rep.pass())
        throw axiom_failure("pi0 refused: presentation fails check_axioms", std::move(rep));
    return p.objs;
}

Bimodule pi1(const AnnPresentation& p, const ExecPolicy& pol) {
    AxiomReport rep = check_axioms(p, pol);
    if (!rep.pass())
        throw axiom_failure("pi1 refused: presentation fails check_axioms", std::move(rep));
    return Bimodule{p.objs, p.labels, p.lact, p.ract};
}

} // namespace anncat
