#include "anncat/functor.hpp"

#include <string>

#include "families.hpp"

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

void validate_functor_structure(const AnnFunctor& f) {
    const int n = f.src.objs.n;
    if (static_cast<int>(f.omap.size()) != n)
        throw validation_error("table-size", {}, "omap size mismatch");
    for (int v : f.omap)
        if (v < 0 || v >= f.dst.objs.n)
            throw validation_error("entry-range", {v}, "omap entry out of range");
    if (static_cast<int>(f.lmap.size()) != f.src.labels.n)
        throw validation_error("table-size", {}, "lmap size mismatch");
    for (int v : f.lmap)
        if (v < 0 || v >= f.dst.labels.n)
            throw validation_error("entry-range", {v}, "lmap entry out of range");
    check_label_table(f.mu, static_cast<std::size_t>(n) * n, f.dst.labels.n, "mu");
    check_label_table(f.nu, static_cast<std::size_t>(n) * n, f.dst.labels.n, "nu");

    // Standing assumptions F(O) = O, F(I) = I.
    if (f.omap[f.src.objs.zero] != f.dst.objs.zero)
        throw validation_error("functor-zero", {f.src.objs.zero},
                               "functor does not send O to O");
    if (f.omap[f.src.objs.one] != f.dst.objs.one)
        throw validation_error("functor-one", {f.src.objs.one}, "functor does not send I to I");
    if (f.lmap[f.src.labels.zero] != f.dst.labels.zero)
        throw validation_error("functor-label-zero", {f.src.labels.zero},
                               "label map does not preserve zero");

    // omap must be a map of object tables (skeletal strictness: the structure
    // isos F-breve/F-tilde connect equal objects).
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (f.omap[f.src.objs.plus(x, y)] != f.dst.objs.plus(f.omap[x], f.omap[y]))
                throw validation_error("omap-additive", {x, y},
                                       "object map not additive at (" + std::to_string(x) + "," +
                                           std::to_string(y) + ")");
            if (f.omap[f.src.objs.times(x, y)] != f.dst.objs.times(f.omap[x], f.omap[y]))
                throw validation_error("omap-multiplicative", {x, y},
                                       "object map not multiplicative at (" + std::to_string(x) +
                                           "," + std::to_string(y) + ")");
        }
    for (int a = 0; a < f.src.labels.n; ++a)
        for (int b = 0; b < f.src.labels.n; ++b)
            if (f.lmap[f.src.labels.sum(a, b)] != f.dst.labels.sum(f.lmap[a], f.lmap[b]))
                throw validation_error("lmap-additive", {a, b},
                                       "label map not additive at (" + std::to_string(a) + "," +
                                           std::to_string(b) + ")");

    // q(xa) = p(x)q(a) and q(ax) = q(a)p(x).
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < f.src.labels.n; ++a) {
            if (f.lmap[f.src.left(x, a)] != f.dst.left(f.omap[x], f.lmap[a]))
                throw validation_error("action-intertwine-left", {x, a},
                                       "q(xa) != p(x)q(a) at (" + std::to_string(x) + "," +
                                           std::to_string(a) + ")");
            if (f.lmap[f.src.right(x, a)] != f.dst.right(f.omap[x], f.lmap[a]))
                throw validation_error("action-intertwine-right", {x, a},
                                       "q(ax) != q(a)p(x) at (" + std::to_string(x) + "," +
                                           std::to_string(a) + ")");
        }
}

std::vector<Family> functor_families(const AnnFunctor& f) {
    const int n = f.src.objs.n;
    const int ml = f.src.labels.n;
    const AnnFunctor* F = &f;
    const AnnPresentation* d = &f.dst;
    std::vector<Family> fams;

    auto id = [d](int obj) { return identity_mor(*d, obj); };
    // F-breve_{X,Y}: FX + FY -> F(X+Y), label mu(X,Y)
    auto fb = [F, d](int x, int y) {
        return Mor{d->objs.plus(F->fobj(x), F->fobj(y)), F->mu_at(x, y)};
    };
    // F-tilde_{X,Y}: FX (x) FY -> F(XY), label nu(X,Y)
    auto ft = [F, d](int x, int y) {
        return Mor{d->objs.times(F->fobj(x), F->fobj(y)), F->nu_at(x, y)};
    };
    auto cp_dst = [d](int u, int v) { return Mor{d->objs.plus(u, v), d->et(u, v)}; };
    auto lb_dst = [d](int a, int x, int y) {
        return Mor{d->objs.times(a, d->objs.plus(x, y)), d->lam(a, x, y)};
    };

    fams.push_back({"fplus.assoc", "oplus-functor", {n, n, n}, [F, d, fb, id](const int* t) {
                        const int x = t[0], y = t[1], z = t[2];
                        Mor lhs = compose(*d, fb(F->src.objs.plus(x, y), z),
                                          oplus_mor(*d, fb(x, y), id(F->fobj(z))));
                        Mor rhs = compose(*d, fb(x, F->src.objs.plus(y, z)),
                                          oplus_mor(*d, id(F->fobj(x)), fb(y, z)));
                        return std::pair(lhs.lab, rhs.lab);
                    }});
    fams.push_back({"fplus.comm", "oplus-functor", {n, n}, [F, d, fb, cp_dst](const int* t) {
                        const int x = t[0], y = t[1];
                        Mor fc = F->apply(Mor{F->src.objs.plus(x, y), F->src.et(x, y)});
                        Mor lhs = compose(*d, fc, fb(x, y));
                        Mor rhs = compose(*d, fb(y, x), cp_dst(F->fobj(x), F->fobj(y)));
                        return std::pair(lhs.lab, rhs.lab);
                    }});
    fams.push_back({"fplus.unit-left", "oplus-functor", {n}, [F, d](const int* t) {
                        return std::pair(F->mu_at(F->src.objs.zero, t[0]), d->labels.zero);
                    }});
    fams.push_back({"fplus.unit-right", "oplus-functor", {n}, [F, d](const int* t) {
                        return std::pair(F->mu_at(t[0], F->src.objs.zero), d->labels.zero);
                    }});

    fams.push_back({"ftimes.assoc", "otimes-functor", {n, n, n}, [F, d, ft, id](const int* t) {
                        const int x = t[0], y = t[1], z = t[2];
                        Mor lhs = compose(*d, ft(F->src.objs.times(x, y), z),
                                          otimes_mor(*d, ft(x, y), id(F->fobj(z))));
                        Mor rhs = compose(*d, ft(x, F->src.objs.times(y, z)),
                                          otimes_mor(*d, id(F->fobj(x)), ft(y, z)));
                        return std::pair(lhs.lab, rhs.lab);
                    }});

    fams.push_back({"fdist.l", "distributivity", {n, n, n},
                    [F, d, fb, ft, lb_dst, id](const int* t) {
                        const int x = t[0], y = t[1], z = t[2];
                        Mor e1 = otimes_mor(*d, id(F->fobj(x)), fb(y, z));
                        Mor e2 = ft(x, F->src.objs.plus(y, z));
                        Mor e3 = F->apply(Mor{
                            F->src.objs.times(x, F->src.objs.plus(y, z)), F->src.lam(x, y, z)});
                        Mor lhs = compose(*d, e3, compose(*d, e2, e1));
                        Mor d1 = lb_dst(F->fobj(x), F->fobj(y), F->fobj(z));
                        Mor d2 = oplus_mor(*d, ft(x, y), ft(x, z));
                        Mor d3 = fb(F->src.objs.times(x, y), F->src.objs.times(x, z));
                        Mor rhs = compose(*d, d3, compose(*d, d2, d1));
                        return std::pair(lhs.lab, rhs.lab);
                    }});
    fams.push_back({"fdist.r", "distributivity", {n, n, n},
                    [F, d, fb, ft, id](const int* t) {
                        const int x = t[0], y = t[1], z = t[2];
                        Mor e1 = otimes_mor(*d, fb(x, y), id(F->fobj(z)));
                        Mor e2 = ft(F->src.objs.plus(x, y), z);
                        // F(R') with R' strict in the source
                        Mor e3 = F->apply(identity_mor(
                            F->src, F->src.objs.times(F->src.objs.plus(x, y), z)));
                        Mor lhs = compose(*d, e3, compose(*d, e2, e1));
                        Mor d1 = id(d->objs.times(
                            d->objs.plus(F->fobj(x), F->fobj(y)), F->fobj(z)));
                        Mor d2 = oplus_mor(*d, ft(x, z), ft(y, z));
                        Mor d3 = fb(F->src.objs.times(x, z), F->src.objs.times(y, z));
                        Mor rhs = compose(*d, d3, compose(*d, d2, d1));
                        return std::pair(lhs.lab, rhs.lab);
                    }});

    fams.push_back({"fnat.plus", "naturality", {n, n, ml, ml}, [F, d, fb](const int* t) {
                        Mor f1{t[0], t[2]}, g1{t[1], t[3]};
                        Mor lhs = compose(*d, fb(t[0], t[1]),
                                          oplus_mor(*d, F->apply(f1), F->apply(g1)));
                        Mor rhs = compose(*d, F->apply(oplus_mor(F->src, f1, g1)), fb(t[0], t[1]));
                        return std::pair(lhs.lab, rhs.lab);
                    }});
    fams.push_back({"fnat.times", "naturality", {n, n, ml, ml}, [F, d, ft](const int* t) {
                        Mor f1{t[0], t[2]}, g1{t[1], t[3]};
                        Mor lhs = compose(*d, ft(t[0], t[1]),
                                          otimes_mor(*d, F->apply(f1), F->apply(g1)));
                        Mor rhs = compose(*d, F->apply(otimes_mor(F->src, f1, g1)),
                                          ft(t[0], t[1]));
                        return std::pair(lhs.lab, rhs.lab);
                    }});

    return fams;
}

} // namespace

AnnFunctor make_pq_functor(const AnnPresentation& src, const AnnPresentation& dst,
                           const RingHom& p, const GroupHom& q, std::vector<int> mu,
                           std::vector<int> nu) {
    if (!(p.src == src.objs) || !(p.dst == dst.objs))
        throw validation_error("p-mismatch", {},
                               "ring hom endpoints do not match the presentations");
    if (!(q.src == src.labels) || !(q.dst == dst.labels))
        throw validation_error("q-mismatch", {},
                               "group hom endpoints do not match the label groups");
    AnnFunctor f{src, dst, p.map, q.map, std::move(mu), std::move(nu)};
    validate_functor_structure(f);
    return f;
}

AnnFunctor identity_functor(const AnnPresentation& a) {
    AnnFunctor f;
    f.src = a;
    f.dst = a;
    f.omap.resize(a.objs.n);
    for (int i = 0; i < a.objs.n; ++i) f.omap[i] = i;
    f.lmap.resize(a.labels.n);
    for (int i = 0; i < a.labels.n; ++i) f.lmap[i] = i;
    f.mu.assign(static_cast<std::size_t>(a.objs.n) * a.objs.n, a.labels.zero);
    f.nu = f.mu;
    return f;
}

AnnFunctor compose_functors(const AnnFunctor& outer, const AnnFunctor& inner) {
    if (!(inner.dst == outer.src))
        throw validation_error("compose-mismatch", {},
                               "inner functor target differs from outer functor source");
    AnnFunctor f;
    f.src = inner.src;
    f.dst = outer.dst;
    const int n = inner.src.objs.n;
    f.omap.resize(n);
    for (int i = 0; i < n; ++i) f.omap[i] = outer.omap[inner.omap[i]];
    f.lmap.resize(inner.src.labels.n);
    for (int i = 0; i < inner.src.labels.n; ++i) f.lmap[i] = outer.lmap[inner.lmap[i]];
    f.mu.resize(static_cast<std::size_t>(n) * n);
    f.nu.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const std::size_t i = static_cast<std::size_t>(x) * n + y;
            f.mu[i] = outer.dst.labels.sum(outer.lmap[inner.mu_at(x, y)],
                                           outer.mu_at(inner.fobj(x), inner.fobj(y)));
            f.nu[i] = outer.dst.labels.sum(outer.lmap[inner.nu_at(x, y)],
                                           outer.nu_at(inner.fobj(x), inner.fobj(y)));
        }
    validate_functor_structure(f);
    return f;
}

AxiomReport check_functor(const AnnFunctor& f, const ExecPolicy& pol) {
    return scan_families(functor_families(f), pol);
}

std::pair<int, int> reevaluate_functor(const AnnFunctor& f, std::string_view family,
                                       std::span<const int> tuple) {
    return eval_family_at(functor_families(f), family, tuple);
}

} // namespace anncat
