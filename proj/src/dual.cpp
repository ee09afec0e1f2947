#include "anncat/dual.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace anncat {

namespace {

void validate_dual_shape(const AnnFunctor& f, const DualObject& d) {
    if (d.r < 0 || d.r >= f.dst.objs.n)
        throw validation_error("dual-shape", {d.r}, "dual object r out of range");
    if (static_cast<int>(d.u.size()) != f.src.objs.n)
        throw validation_error("dual-shape", {d.r},
                               "dual object u-table has " + std::to_string(d.u.size()) +
                                   " entries, expected " + std::to_string(f.src.objs.n) +
                                   " (mixed fixtures?)");
    for (int v : d.u)
        if (v < 0 || v >= f.dst.labels.n)
            throw validation_error("dual-shape", {v}, "dual object u value out of label range");
}

bool commutes_with_image(const AnnFunctor& f, int r) {
    for (int x = 0; x < f.src.objs.n; ++x)
        if (f.dst.objs.times(r, f.fobj(x)) != f.dst.objs.times(f.fobj(x), r)) return false;
    return true;
}

// Right-hand side of the oplus-compatibility recurrence solved for u(x+y):
// u(x+y) = u(x) + u(y) + lambda(r, px, py) + mu(x,y).r - r.mu(x,y)
int d2_shift(const AnnFunctor& f, int r, int x, int y) {
    const AnnPresentation& a = f.dst;
    int mu = f.mu_at(x, y);
    int s = a.lam(r, f.fobj(x), f.fobj(y));
    s = a.labels.sum(s, a.right(r, mu));
    s = a.labels.sum(s, a.labels.minus(a.left(r, mu)));
    return s;
}

bool guarded_r(const AnnFunctor& f, int r) {
    for (int b = 0; b < f.src.labels.n; ++b)
        if (f.dst.left(r, f.flab(b)) != f.dst.right(r, f.flab(b))) return false;
    return true;
}

} // namespace

bool is_dual_object_closed_form(const AnnFunctor& f, const DualObject& d) {
    validate_dual_shape(f, d);
    const AnnPresentation& a = f.dst;
    const AnnPresentation& b = f.src;
    const int r = d.r;

    if (d.u[b.objs.one] != a.labels.zero) return false;
    if (!commutes_with_image(f, r)) return false;

    for (int x = 0; x < b.objs.n; ++x)
        for (int y = 0; y < b.objs.n; ++y) {
            // u(r,x) - u(r,x+y) + u(r,y) = mu(x,y)r + r mu(x,y) - lambda(r,px,py)
            int lhs = a.labels.sum(a.labels.sum(d.u[x], a.labels.minus(d.u[b.objs.plus(x, y)])),
                                   d.u[y]);
            int mu = f.mu_at(x, y);
            int rhs = a.labels.sum(a.labels.sum(a.right(r, mu), a.left(r, mu)),
                                   a.labels.minus(a.lam(r, f.fobj(x), f.fobj(y))));
            if (lhs != rhs) return false;

            // x u(r,y) - u(r,xy) + u(r,x) y = r nu(x,y) - nu(x,y) r
            int lhs2 = a.labels.sum(
                a.labels.sum(a.left(f.fobj(x), d.u[y]), a.labels.minus(d.u[b.objs.times(x, y)])),
                a.right(f.fobj(y), d.u[x]));
            int nu = f.nu_at(x, y);
            int rhs2 = a.labels.sum(a.left(r, nu), a.labels.minus(a.right(r, nu)));
            if (lhs2 != rhs2) return false;
        }
    return true;
}

bool is_dual_object_diagrammatic(const AnnFunctor& f, const DualObject& d) {
    validate_dual_shape(f, d);
    const AnnPresentation& a = f.dst;
    const AnnPresentation& b = f.src;
    const int r = d.r;

    if (d.u[b.objs.one] != a.labels.zero) return false;
    // u_{r,X}: r (x) FX -> FX (x) r must be an endomorphism.
    if (!commutes_with_image(f, r)) return false;

    auto idm = [&a](int obj) { return identity_mor(a, obj); };
    auto u_at = [&](int x) { return Mor{a.objs.times(r, f.fobj(x)), d.u[x]}; };
    auto fb = [&](int x, int y) {
        return Mor{a.objs.plus(f.fobj(x), f.fobj(y)), f.mu_at(x, y)};
    };
    auto ft = [&](int x, int y) {
        return Mor{a.objs.times(f.fobj(x), f.fobj(y)), f.nu_at(x, y)};
    };
    Mor idr = idm(r);

    for (int x = 0; x < b.objs.n; ++x)
        for (int y = 0; y < b.objs.n; ++y) {
            // Diagram (2): oplus-compatibility through F-breve.
            {
                Mor lbreve{a.objs.times(r, a.objs.plus(f.fobj(x), f.fobj(y))),
                           a.lam(r, f.fobj(x), f.fobj(y))};
                Mor lhs = compose(a, u_at(b.objs.plus(x, y)), otimes_mor(a, idr, fb(x, y)));
                Mor rhs = compose(
                    a, otimes_mor(a, fb(x, y), idr),
                    compose(a, oplus_mor(a, u_at(x), u_at(y)), lbreve));
                if (lhs.lab != rhs.lab) return false;
            }
            // Diagram (3): otimes-compatibility through F-tilde.
            {
                Mor lhs = compose(a, u_at(b.objs.times(x, y)), otimes_mor(a, idr, ft(x, y)));
                Mor rhs = compose(
                    a, otimes_mor(a, ft(x, y), idr),
                    compose(a, otimes_mor(a, idm(f.fobj(x)), u_at(y)),
                            otimes_mor(a, u_at(x), idm(f.fobj(y)))));
                if (lhs.lab != rhs.lab) return false;
            }
        }

    // Naturality of u_{r,-} against every morphism (x, b') of the source.
    for (int x = 0; x < b.objs.n; ++x)
        for (int lb = 0; lb < b.labels.n; ++lb) {
            Mor fm = f.apply(Mor{x, lb});
            Mor lhs = compose(a, u_at(x), otimes_mor(a, idr, fm));
            Mor rhs = compose(a, otimes_mor(a, fm, idr), u_at(x));
            if (lhs.lab != rhs.lab) return false;
        }
    return true;
}

std::vector<DualObject> enumerate_dual_objects(const AnnFunctor& f, const DualSearchCaps& caps,
                                               const ExecPolicy& pol) {
    const AnnPresentation& a = f.dst;
    const AnnPresentation& b = f.src;
    const int n = b.objs.n;
    const int m = a.labels.n;

    std::vector<int> image(n);
    for (int x = 0; x < n; ++x) image[x] = f.fobj(x);
    const std::vector<int> centr = centralizer_in_ring(a.objs, image);

    // Propagation plan over the additive group of source objects: each step
    // derives u at w+g from u at w and u at g. The subgroup generated by I is
    // seeded first (u(I) = 0), the rest from greedily chosen free generators.
    struct Step {
        int z, w, g;
    };
    std::vector<Step> steps;
    std::vector<int> gens;
    std::vector<char> known(n, 0);
    std::vector<int> order;
    known[b.objs.zero] = 1;
    order.push_back(b.objs.zero);
    auto close_over = [&](int g) {
        for (std::size_t i = 0; i < order.size(); ++i) {
            int z = b.objs.plus(order[i], g);
            if (!known[z]) {
                known[z] = 1;
                order.push_back(z);
                steps.push_back({z, order[i], g});
            }
        }
    };
    if (!known[b.objs.one]) {
        known[b.objs.one] = 1;
        order.push_back(b.objs.one);
        close_over(b.objs.one);
    }
    for (int x = 0; x < n; ++x)
        if (!known[x]) {
            gens.push_back(x);
            known[x] = 1;
            order.push_back(x);
            close_over(x);
        }

    const int free_dims = static_cast<int>(gens.size());
    const double estimate = std::pow(static_cast<double>(m), free_dims);
    if (free_dims > caps.max_free_dims)
        throw capacity_error("u-table search needs " + std::to_string(free_dims) +
                                 " free dimensions (cap " + std::to_string(caps.max_free_dims) +
                                 "), about " + std::to_string(estimate) + " candidates per r",
                             estimate * static_cast<double>(centr.size()));

    std::uint64_t per_r = 1;
    for (int i = 0; i < free_dims; ++i) per_r *= static_cast<std::uint64_t>(m);

    std::vector<std::vector<DualObject>> found(centr.size());

    auto search_r = [&](std::size_t ri) {
        const int r = centr[ri];
        DualObject d;
        d.r = r;
        d.u.assign(n, 0);
        std::vector<int> assign(free_dims, 0);
        for (std::uint64_t c = 0; c < per_r; ++c) {
            std::uint64_t cc = c;
            for (int i = free_dims - 1; i >= 0; --i) {
                assign[i] = static_cast<int>(cc % m);
                cc /= m;
            }
            // Seeds: u(0) from the recurrence at (0,0), u(I) = 0.
            d.u[b.objs.zero] = a.labels.minus(d2_shift(f, r, b.objs.zero, b.objs.zero));
            d.u[b.objs.one] = a.labels.zero;
            for (int i = 0; i < free_dims; ++i) d.u[gens[i]] = assign[i];
            for (const auto& st : steps)
                d.u[st.z] = a.labels.sum(a.labels.sum(d.u[st.w], d.u[st.g]),
                                         d2_shift(f, r, st.w, st.g));
            // Full diagrammatic re-check also catches propagation-path
            // inconsistencies and the naturality condition.
            if (is_dual_object_diagrammatic(f, d)) found[ri].push_back(d);
        }
    };

    bool parallel = pol.mode == ExecMode::parallel;
#ifndef _OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef _OPENMP
        const int threads = pol.workers > 0 ? pol.workers : omp_get_max_threads();
#pragma omp parallel for num_threads(threads) schedule(dynamic)
        for (long long ri = 0; ri < static_cast<long long>(centr.size()); ++ri)
            search_r(static_cast<std::size_t>(ri));
#endif
    } else {
        for (std::size_t ri = 0; ri < centr.size(); ++ri) search_r(ri);
    }

    std::vector<DualObject> out;
    for (auto& part : found)
        for (auto& d : part) out.push_back(std::move(d));
    std::sort(out.begin(), out.end());
    return out;
}

DualObject dual_sum(const AnnFunctor& f, const DualObject& a, const DualObject& b) {
    validate_dual_shape(f, a);
    validate_dual_shape(f, b);
    const AnnPresentation& t = f.dst;
    DualObject out;
    out.r = t.objs.plus(a.r, b.r);
    out.u.resize(f.src.objs.n);
    for (int x = 0; x < f.src.objs.n; ++x)
        out.u[x] = t.labels.sum(t.labels.sum(a.u[x], b.u[x]),
                                t.labels.minus(t.lam(f.fobj(x), a.r, b.r)));
    return out;
}

DualObject dual_product(const AnnFunctor& f, const DualObject& a, const DualObject& b) {
    validate_dual_shape(f, a);
    validate_dual_shape(f, b);
    const AnnPresentation& t = f.dst;
    DualObject out;
    out.r = t.objs.times(a.r, b.r);
    out.u.resize(f.src.objs.n);
    for (int x = 0; x < f.src.objs.n; ++x)
        out.u[x] = t.labels.sum(t.right(b.r, a.u[x]), t.left(a.r, b.u[x]));
    return out;
}

DualObject dual_negate(const AnnFunctor& f, const DualObject& a) {
    validate_dual_shape(f, a);
    const AnnPresentation& t = f.dst;
    DualObject out;
    out.r = t.objs.minus(a.r);
    out.u.resize(f.src.objs.n);
    for (int x = 0; x < f.src.objs.n; ++x)
        out.u[x] = t.labels.sum(t.lam(f.fobj(x), a.r, out.r), t.labels.minus(a.u[x]));
    return out;
}

DualObject dual_zero(const AnnFunctor& f) {
    return DualObject{f.dst.objs.zero,
                      std::vector<int>(static_cast<std::size_t>(f.src.objs.n),
                                       f.dst.labels.zero)};
}

DualObject dual_one(const AnnFunctor& f) {
    return DualObject{f.dst.objs.one,
                      std::vector<int>(static_cast<std::size_t>(f.src.objs.n),
                                       f.dst.labels.zero)};
}

DualCategory build_dual_category(const AnnFunctor& f, const DualSearchCaps& caps,
                                 const ExecPolicy& pol) {
    const AnnPresentation& a = f.dst;
    DualCategory dc;
    dc.base = f;
    dc.objects = enumerate_dual_objects(f, caps, pol);
    const int k = static_cast<int>(dc.objects.size());
    if (k == 0)
        throw inconsistency_error("dual category has no objects; the zero module (O, u=0) "
                                  "should always qualify");

    auto find = [&](const DualObject& d) {
        auto it = std::lower_bound(dc.objects.begin(), dc.objects.end(), d);
        if (it == dc.objects.end() || !(*it == d)) return -1;
        return static_cast<int>(it - dc.objects.begin());
    };

    std::vector<int> oplus(static_cast<std::size_t>(k) * k);
    std::vector<int> otimes(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int s = find(dual_sum(f, dc.objects[i], dc.objects[j]));
            if (s < 0)
                throw inconsistency_error("dual_sum output escaped the enumerated object set at (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
            oplus[static_cast<std::size_t>(i) * k + j] = s;
            int p = find(dual_product(f, dc.objects[i], dc.objects[j]));
            if (p < 0)
                throw inconsistency_error(
                    "dual_product output escaped the enumerated object set at (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
            otimes[static_cast<std::size_t>(i) * k + j] = p;
        }
    const int zero = find(dual_zero(f));
    const int one = find(dual_one(f));
    if (zero < 0 || one < 0)
        throw inconsistency_error("dual zero or unit object missing from enumeration");

    // Hom labels: elements of the target label group commuting with the omap
    // image, per the morphism condition p(x)a = a p(x).
    std::vector<int> image(f.src.objs.n);
    for (int x = 0; x < f.src.objs.n; ++x) image[x] = f.fobj(x);
    Bimodule target_labels{a.objs, a.labels, a.lact, a.ract};
    dc.label_elems = centralizer_in_module(target_labels, image);
    AbelianGroup labels = subgroup_group(a.labels, dc.label_elems);
    std::vector<int> pos(a.labels.n, -1);
    for (std::size_t i = 0; i < dc.label_elems.size(); ++i) pos[dc.label_elems[i]] = static_cast<int>(i);

    const int lm = labels.n;
    std::vector<int> lact(static_cast<std::size_t>(k) * lm);
    std::vector<int> ract(static_cast<std::size_t>(k) * lm);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < lm; ++j) {
            int l = pos[a.left(dc.objects[i].r, dc.label_elems[j])];
            int rr = pos[a.right(dc.objects[i].r, dc.label_elems[j])];
            if (l < 0 || rr < 0)
                throw inconsistency_error("label action leaves the centralizer subgroup");
            lact[static_cast<std::size_t>(i) * lm + j] = l;
            ract[static_cast<std::size_t>(i) * lm + j] = rr;
        }

    std::vector<int> lambda(static_cast<std::size_t>(k) * k * k);
    std::vector<int> eta(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int e = pos[a.et(dc.objects[i].r, dc.objects[j].r)];
            if (e < 0)
                throw inconsistency_error("inherited eta label is not central");
            eta[static_cast<std::size_t>(i) * k + j] = e;
            for (int l = 0; l < k; ++l) {
                int lv = pos[a.lam(dc.objects[i].r, dc.objects[j].r, dc.objects[l].r)];
                if (lv < 0)
                    throw inconsistency_error("inherited lambda label is not central");
                lambda[(static_cast<std::size_t>(i) * k + j) * k + l] = lv;
            }
        }

    try {
        FiniteRing ring = validate_ring_tables(k, std::move(oplus), std::move(otimes), zero, one);
        dc.pres = assemble_presentation(std::move(ring), std::move(labels), std::move(lact),
                                        std::move(ract), std::move(lambda), std::move(eta));
    } catch (const validation_error& e) {
        throw inconsistency_error(std::string("dual object tables violate presentation laws: ") +
                                  e.what());
    }
    return dc;
}

CenterResult center(const AnnPresentation& a, const DualSearchCaps& caps, const ExecPolicy& pol) {
    AxiomReport rep = check_axioms(a, pol);
    if (!rep.pass())
        throw axiom_failure("center refused: presentation fails check_axioms", std::move(rep));

    CenterResult res;
    res.dual = build_dual_category(identity_functor(a), caps, pol);

    std::vector<int> pos(a.labels.n, -1);
    for (std::size_t i = 0; i < res.dual.label_elems.size(); ++i)
        pos[res.dual.label_elems[i]] = static_cast<int>(i);

    const int k = static_cast<int>(res.dual.objects.size());
    res.braiding.resize(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int lab = pos[res.dual.objects[i].u[res.dual.objects[j].r]];
            if (lab < 0)
                throw inconsistency_error("center braiding label u_A(B) is not central");
            res.braiding[static_cast<std::size_t>(i) * k + j] = lab;
        }
    return res;
}

AnnFunctor forgetful_functor(const DualCategory& d) {
    const int k = static_cast<int>(d.objects.size());
    std::vector<int> omap(k);
    for (int i = 0; i < k; ++i) omap[i] = d.objects[i].r;
    RingHom p = make_ring_hom(d.pres.objs, d.base.dst.objs, std::move(omap));
    GroupHom q = make_group_hom(d.pres.labels, d.base.dst.labels, d.label_elems);
    std::vector<int> zeros(static_cast<std::size_t>(k) * k, d.base.dst.labels.zero);
    return make_pq_functor(d.pres, d.base.dst, p, q, zeros, zeros);
}

AgreementReport oracle_agreement(const AnnFunctor& f, std::uint64_t max_candidates) {
    const AnnPresentation& a = f.dst;
    const AnnPresentation& b = f.src;
    const int n = b.objs.n;
    const int m = a.labels.n;

    std::vector<int> image(n);
    for (int x = 0; x < n; ++x) image[x] = f.fobj(x);
    const std::vector<int> centr = centralizer_in_ring(a.objs, image);

    const double est = std::pow(static_cast<double>(m), n) * static_cast<double>(centr.size());
    if (est > static_cast<double>(max_candidates))
        throw capacity_error("oracle agreement scan would visit about " + std::to_string(est) +
                                 " candidates (cap " + std::to_string(max_candidates) + ")",
                             est);

    std::uint64_t per_r = 1;
    for (int i = 0; i < n; ++i) per_r *= static_cast<std::uint64_t>(m);

    AgreementReport rep;
    DualObject d;
    d.u.assign(n, 0);
    for (int r : centr) {
        d.r = r;
        const bool guarded = guarded_r(f, r);
        for (std::uint64_t c = 0; c < per_r; ++c) {
            std::uint64_t cc = c;
            for (int i = n - 1; i >= 0; --i) {
                d.u[i] = static_cast<int>(cc % m);
                cc /= m;
            }
            ++rep.candidates;
            bool cf = is_dual_object_closed_form(f, d);
            bool dg = is_dual_object_diagrammatic(f, d);
            if (cf != dg) rep.discrepancies.push_back({d, cf, dg, guarded});
        }
    }
    return rep;
}

} // namespace anncat
