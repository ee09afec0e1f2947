#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anncat/functor.hpp"
#include "test_support.hpp"

using namespace anncat;
using anntest::strict_zn;

namespace {

AnnFunctor reduction_z4_z2(std::vector<int> mu = std::vector<int>(16, 0),
                           std::vector<int> nu = std::vector<int>(16, 0)) {
    AnnPresentation b = strict_zn(4);
    AnnPresentation a = strict_zn(2);
    RingHom p = make_ring_hom(b.objs, a.objs, {0, 1, 0, 1});
    GroupHom q = make_group_hom(b.labels, a.labels, {0, 1, 0, 1});
    return make_pq_functor(b, a, p, q, std::move(mu), std::move(nu));
}

} // namespace

TEST_CASE("identity functors pass check_functor") {
    for (int n : {1, 2, 3, 6}) {
        CAPTURE(n);
        AnnFunctor f = identity_functor(strict_zn(n));
        CHECK(check_functor(f).pass());
    }
    CHECK(check_functor(identity_functor(anntest::strict_of(anntest::t2z2_ring()))).pass());
    CHECK(check_functor(identity_functor(anntest::z4_mod2_presentation())).pass());
}

TEST_CASE("reduction functor Z_4 -> Z_2 with mu = nu = 0") {
    AnnFunctor f = reduction_z4_z2();
    AxiomReport rep = check_functor(f);
    CHECK(rep.pass());
    for (const auto& fam : rep.families) {
        CAPTURE(fam.name);
        CHECK(fam.failures == 0);
    }
}

TEST_CASE("single-entry mu perturbation breaks the oplus-functor family") {
    std::vector<int> mu(16, 0);
    mu[1 * 4 + 1] = 1; // mu(1,1) = 1
    AnnFunctor f = reduction_z4_z2(mu);
    AxiomReport rep = check_functor(f);
    CHECK(!rep.pass());

    const FamilyResult* fa = rep.find("fplus.assoc");
    REQUIRE(fa != nullptr);
    CHECK(!fa->pass());
    // First failing tuple of the cocycle law for mu = delta_(1,1):
    // mu(1,1) + mu(2,2') vs mu(1,2) + mu(1,3) at (X,Y,Z) = (1,1,2).
    CHECK(fa->witness == std::vector<int>{1, 1, 2});
    auto [lhs, rhs] = reevaluate_functor(f, "fplus.assoc", fa->witness);
    CHECK(lhs != rhs);

    // The distributivity compatibility squares pick it up as well.
    CHECK(!rep.find("fdist.l")->pass());
    CHECK(rep.find("fdist.l")->witness == std::vector<int>{3, 1, 1});
    CHECK(!rep.find("fdist.r")->pass());
    CHECK(rep.find("fdist.r")->witness == std::vector<int>{1, 1, 3});
    // But the symmetric pairing survives since the perturbation is symmetric.
    CHECK(rep.find("fplus.comm")->pass());
}

TEST_CASE("action intertwining is enforced with a witness") {
    AnnPresentation t2 = anntest::strict_of(anntest::t2z2_ring());
    RingHom p = identity_ring_hom(t2.objs);
    // Swap the two diagonal components: additive but not an action map.
    std::vector<int> swap_map(8);
    for (int i = 0; i < 8; ++i) swap_map[i] = ((i & 1) << 2) | (i & 2) | ((i >> 2) & 1);
    GroupHom q = make_group_hom(t2.labels, t2.labels, swap_map);
    try {
        make_pq_functor(t2, t2, p, q, std::vector<int>(64, 0), std::vector<int>(64, 0));
        FAIL("expected a validation error");
    } catch (const validation_error& e) {
        CHECK(e.check == "action-intertwine-left");
        CHECK(e.witness == std::vector<int>{1, 1});
    }
}

TEST_CASE("functor composition closure") {
    AnnPresentation z8 = strict_zn(8);
    AnnPresentation z4 = strict_zn(4);
    AnnPresentation z2 = strict_zn(2);
    RingHom p1 = make_ring_hom(z8.objs, z4.objs, {0, 1, 2, 3, 0, 1, 2, 3});
    GroupHom q1 = make_group_hom(z8.labels, z4.labels, {0, 1, 2, 3, 0, 1, 2, 3});
    AnnFunctor f1 = make_pq_functor(z8, z4, p1, q1, std::vector<int>(64, 0),
                                    std::vector<int>(64, 0));
    RingHom p2 = make_ring_hom(z4.objs, z2.objs, {0, 1, 0, 1});
    GroupHom q2 = make_group_hom(z4.labels, z2.labels, {0, 1, 0, 1});
    AnnFunctor f2 = make_pq_functor(z4, z2, p2, q2, std::vector<int>(16, 0),
                                    std::vector<int>(16, 0));

    AnnFunctor g = compose_functors(f2, f1);
    CHECK(g.fobj(5) == 1);
    CHECK(g.fobj(6) == 0);
    CHECK(check_functor(g).pass());

    SUBCASE("identity is neutral for composition") {
        AnnFunctor gi = compose_functors(identity_functor(z2), f2);
        CHECK(gi.omap == f2.omap);
        CHECK(gi.mu == f2.mu);
        CHECK(check_functor(gi).pass());
    }

    SUBCASE("mismatched endpoints are refused") {
        CHECK_THROWS_AS(compose_functors(f1, f2), validation_error);
    }
}

TEST_CASE("a functor with genuinely nonzero mu passes every family") {
    // Identity on the strict (Z_4, Z_2) presentation with mu(x,y) =
    // odd(x) odd(y): symmetric, a 2-cocycle, and compatible with the mod-2
    // action since lact(x) multiplies by x mod 2.
    AnnPresentation p = anntest::z4_mod2_presentation();
    std::vector<int> mu(16, 0);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) mu[x * 4 + y] = (x & 1) * (y & 1);
    AnnFunctor f = make_pq_functor(p, p, identity_ring_hom(p.objs),
                                   make_group_hom(p.labels, p.labels, {0, 1}), mu,
                                   std::vector<int>(16, 0));
    AxiomReport rep = check_functor(f);
    CHECK(rep.pass());
    CHECK(f.mu_at(1, 3) == 1);
}

TEST_CASE("check_functor is deterministic across execution modes") {
    AnnFunctor f = reduction_z4_z2();
    AxiomReport par = check_functor(f);
    AxiomReport ser = check_functor(f, serial_policy());
    REQUIRE(par.families.size() == ser.families.size());
    for (std::size_t i = 0; i < par.families.size(); ++i) {
        CHECK(par.families[i].name == ser.families[i].name);
        CHECK(par.families[i].failures == ser.families[i].failures);
        CHECK(par.families[i].witness == ser.families[i].witness);
    }
}
