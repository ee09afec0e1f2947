#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "anncat/finite_algebra.hpp"
#include "anncat/parallel.hpp"
#include "anncat/presentation.hpp"
#include "anncat/report.hpp"

namespace anncat {

// Functor between presentations in the (p, q, mu, nu) form: omap houses p,
// lmap houses q, mu/nu are the labels of the F-breve / F-tilde structure
// morphisms. Objects map strictly (omap is a ring map on object tables), so
// the monoidal structure survives only in the labels.
struct AnnFunctor {
    AnnPresentation src;
    AnnPresentation dst;
    std::vector<int> omap; // src.objs.n -> dst object indices
    std::vector<int> lmap; // src.labels.n -> dst label indices
    std::vector<int> mu;   // src.objs.n^2 flat, dst label indices
    std::vector<int> nu;   // src.objs.n^2 flat, dst label indices

    int fobj(int x) const { return omap[x]; }
    int flab(int a) const { return lmap[a]; }
    int mu_at(int x, int y) const { return mu[static_cast<std::size_t>(x) * src.objs.n + y]; }
    int nu_at(int x, int y) const { return nu[static_cast<std::size_t>(x) * src.objs.n + y]; }

    Mor apply(const Mor& f) const { return Mor{omap[f.obj], lmap[f.lab]}; }

    bool operator==(const AnnFunctor&) const = default;
};

// Builds and structurally validates a functor of type (p, q): p a ring hom
// between the object rings, q a group hom between the label groups satisfying
// the action intertwining q(xa) = p(x)q(a), q(ax) = q(a)p(x). The coherence
// diagrams are the business of check_functor.
AnnFunctor make_pq_functor(const AnnPresentation& src, const AnnPresentation& dst,
                           const RingHom& p, const GroupHom& q, std::vector<int> mu,
                           std::vector<int> nu);

AnnFunctor identity_functor(const AnnPresentation& a);

// outer . inner, with mu/nu combined by the monoidal-functor composition rule
// mu(X,Y) = lmap_outer(mu_inner(X,Y)) + mu_outer(F_inner X, F_inner Y).
AnnFunctor compose_functors(const AnnFunctor& outer, const AnnFunctor& inner);

// Exhaustive evaluation of the Ann-functor coherence diagrams over source
// object (and label) tuples.
AxiomReport check_functor(const AnnFunctor& f, const ExecPolicy& pol = {});

std::pair<int, int> reevaluate_functor(const AnnFunctor& f, std::string_view family,
                                       std::span<const int> tuple);

} // namespace anncat
