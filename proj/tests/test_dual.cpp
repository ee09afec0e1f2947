#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "anncat/dual.hpp"
#include "test_support.hpp"

using namespace anncat;
using anntest::strict_zn;

namespace {

// (Z_2, Z_2) strict embedded into the strict triangular-matrix presentation
// by p(1) = I and q(1) = E12. The q-image is not central, so naturality of
// u_{r,-} genuinely constrains r.
AnnFunctor t2_probe_functor() {
    AnnPresentation b = strict_zn(2);
    AnnPresentation a = anntest::strict_of(anntest::t2z2_ring());
    RingHom p = make_ring_hom(b.objs, a.objs, {0, 5});
    GroupHom q = make_group_hom(b.labels, a.labels, {0, 2});
    return make_pq_functor(b, a, p, q, std::vector<int>(4, 0), std::vector<int>(4, 0));
}

FiniteRing z2xz2_ring() {
    Table add(4, std::vector<int>(4)), mul(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            add[i][j] = (((i >> 1) ^ (j >> 1)) << 1) | ((i ^ j) & 1);
            mul[i][j] = (((i >> 1) & (j >> 1)) << 1) | (i & j & 1);
        }
    return make_table_ring(add, mul, 0, 3);
}

} // namespace

TEST_CASE("membership basics on strict (Z_2, Z_2) with F = id") {
    AnnFunctor f = identity_functor(strict_zn(2));

    CHECK(is_dual_object_diagrammatic(f, {0, {0, 0}}));
    CHECK(is_dual_object_closed_form(f, {0, {0, 0}}));
    CHECK(is_dual_object_diagrammatic(f, {1, {0, 0}}));

    // u(1) != 0 violates u_{r,I} = id.
    CHECK(!is_dual_object_diagrammatic(f, {1, {0, 1}}));
    CHECK(!is_dual_object_closed_form(f, {1, {0, 1}}));

    SUBCASE("shape mismatches are refused, not false") {
        CHECK_THROWS_AS(is_dual_object_diagrammatic(f, {0, {0, 0, 0}}), validation_error);
        CHECK_THROWS_AS(is_dual_object_closed_form(f, {9, {0, 0}}), validation_error);
    }
}

TEST_CASE("enumeration matches the brute-force oracle") {
    SUBCASE("strict (Z_2, Z_2): exactly the two expected objects") {
        AnnFunctor f = identity_functor(strict_zn(2));
        auto objs = enumerate_dual_objects(f);
        REQUIRE(objs.size() == 2);
        CHECK(objs[0] == DualObject{0, {0, 0}});
        CHECK(objs[1] == DualObject{1, {0, 0}});
        CHECK(objs == anntest::brute_force_dual_objects(f));
    }

    SUBCASE("strict (Z_n, Z_n): n objects, u = 0 everywhere") {
        for (int n : {1, 2, 3, 4}) {
            CAPTURE(n);
            AnnFunctor f = identity_functor(strict_zn(n));
            auto objs = enumerate_dual_objects(f);
            REQUIRE(static_cast<int>(objs.size()) == n);
            for (int r = 0; r < n; ++r) {
                CHECK(objs[r].r == r);
                CHECK(std::count(objs[r].u.begin(), objs[r].u.end(), 0) == n);
            }
            CHECK(objs == anntest::brute_force_dual_objects(f));
        }
    }

    SUBCASE("zero ring: the single degenerate object") {
        AnnFunctor f = identity_functor(strict_zn(1));
        auto objs = enumerate_dual_objects(f);
        REQUIRE(objs.size() == 1);
        CHECK(objs[0] == DualObject{0, {0}});
    }

    SUBCASE("Z_2 x Z_2 and the mod-2 module fixture agree with brute force") {
        AnnFunctor f = identity_functor(anntest::strict_of(z2xz2_ring()));
        CHECK(enumerate_dual_objects(f) == anntest::brute_force_dual_objects(f));
        AnnFunctor g = identity_functor(anntest::z4_mod2_presentation());
        CHECK(enumerate_dual_objects(g) == anntest::brute_force_dual_objects(g));
    }

    SUBCASE("execution modes agree") {
        AnnFunctor f = t2_probe_functor();
        CHECK(enumerate_dual_objects(f) ==
              enumerate_dual_objects(f, DualSearchCaps{}, serial_policy()));
    }

    SUBCASE("free-dimension cap refusal carries an estimate") {
        AnnFunctor f = identity_functor(anntest::strict_of(z2xz2_ring()));
        DualSearchCaps caps;
        caps.max_free_dims = 0; // Z_2 x Z_2 needs one generator beyond <I>
        CHECK_THROWS_AS(enumerate_dual_objects(f, caps), capacity_error);
    }
}

TEST_CASE("the probe fixture separates closed-form and diagrammatic membership") {
    AnnFunctor f = t2_probe_functor();

    auto objs = enumerate_dual_objects(f);
    std::vector<int> rs;
    for (const auto& d : objs) rs.push_back(d.r);
    // Matrices with equal diagonal entries commute with E12.
    CHECK(rs == std::vector<int>{0, 2, 5, 7});
    CHECK(objs == anntest::brute_force_dual_objects(f));

    // Closed form accepts u = 0 for every r (the closed-form conditions do not
    // mention the q-image); the diagrams reject the four unguarded r.
    for (int r : {1, 3, 4, 6}) {
        CHECK(is_dual_object_closed_form(f, {r, {0, 0}}));
        CHECK(!is_dual_object_diagrammatic(f, {r, {0, 0}}));
    }

    AgreementReport rep = oracle_agreement(f);
    CHECK(rep.candidates == 8 * 64);
    CHECK(rep.discrepancies.size() == 4);
    for (const auto& c : rep.discrepancies) {
        CHECK(c.closed_form);
        CHECK(!c.diagrammatic);
        CHECK(!c.r_guarded);
    }
    CHECK(rep.guarded_ok());
}

TEST_CASE("oracle agreement is exact on guarded fixtures") {
    for (auto make : {+[] { return identity_functor(strict_zn(2)); },
                      +[] { return identity_functor(strict_zn(3)); },
                      +[] { return identity_functor(anntest::z4_mod2_presentation()); }}) {
        AnnFunctor f = make();
        AgreementReport rep = oracle_agreement(f);
        CHECK(rep.discrepancies.empty());
        CHECK(rep.guarded_ok());
    }
}

TEST_CASE("dual arithmetic") {
    AnnFunctor f = identity_functor(strict_zn(2));
    DualObject a{1, {0, 0}};

    SUBCASE("sum and product on strict fixtures") {
        CHECK(dual_sum(f, a, a) == dual_zero(f));
        CHECK(dual_product(f, dual_one(f), a) == a);
        CHECK(dual_product(f, a, dual_zero(f)) == dual_zero(f));
    }

    SUBCASE("negation is the oplus-inverse") {
        DualObject n = dual_negate(f, a);
        CHECK(n == a); // -1 = 1 in Z_2
        CHECK(dual_sum(f, a, n) == dual_zero(f));
        CHECK(is_dual_object_diagrammatic(f, n));
    }

    SUBCASE("mixed-fixture inputs are refused") {
        AnnFunctor g = identity_functor(strict_zn(3));
        CHECK_THROWS_AS(dual_sum(g, a, a), validation_error);
    }

    SUBCASE("closure under sum, product and negation") {
        for (auto make : {+[] { return identity_functor(anntest::z4_mod2_presentation()); },
                          +[] { return t2_probe_functor(); }}) {
            AnnFunctor h = make();
            auto objs = enumerate_dual_objects(h);
            for (const auto& x : objs) {
                CHECK(is_dual_object_diagrammatic(h, dual_negate(h, x)));
                for (const auto& y : objs) {
                    CHECK(is_dual_object_diagrammatic(h, dual_sum(h, x, y)));
                    CHECK(is_dual_object_diagrammatic(h, dual_product(h, x, y)));
                }
            }
        }
    }
}

TEST_CASE("build_dual_category closes and certifies") {
    SUBCASE("strict (Z_2, Z_2), F = id") {
        DualCategory d = build_dual_category(identity_functor(strict_zn(2)));
        CHECK(d.objects.size() == 2);
        CHECK(d.pres.labels.n == 2);
        CHECK(check_axioms(d.pres).pass());
        CHECK(pi0(d.pres) == make_zn(2));
    }

    SUBCASE("strict (Z_n, Z_n): pi0 of the dual is Z_n again") {
        for (int n : {1, 2, 3, 4, 5, 6}) {
            CAPTURE(n);
            DualCategory d = build_dual_category(identity_functor(strict_zn(n)));
            CHECK(pi0(d.pres) == make_zn(n));
            Bimodule m = pi1(d.pres);
            CHECK(m.grp.n == n); // commutative: the whole label group is central
        }
    }

    SUBCASE("reduction functor: dual over the centralizer ring") {
        AnnPresentation b = strict_zn(4);
        AnnPresentation a = strict_zn(2);
        RingHom p = make_ring_hom(b.objs, a.objs, {0, 1, 0, 1});
        GroupHom q = make_group_hom(b.labels, a.labels, {0, 1, 0, 1});
        AnnFunctor f = make_pq_functor(b, a, p, q, std::vector<int>(16, 0),
                                       std::vector<int>(16, 0));
        DualCategory d = build_dual_category(f);
        CHECK(d.objects.size() == 2);
        CHECK(check_axioms(d.pres).pass());
    }

    SUBCASE("noncommutative probe: dual is the equal-diagonal subring") {
        DualCategory d = build_dual_category(t2_probe_functor());
        CHECK(d.objects.size() == 4);
        CHECK(d.label_elems.size() == 8);
        CHECK(check_axioms(d.pres).pass());
    }
}

TEST_CASE("center construction") {
    SUBCASE("strict (Z_2, Z_2): two objects, zero braiding") {
        CenterResult c = center(strict_zn(2));
        CHECK(c.dual.objects.size() == 2);
        CHECK(std::count(c.braiding.begin(), c.braiding.end(), 0) == 4);
        CHECK(check_braiding(c.dual.pres, c.braiding).pass());
    }

    SUBCASE("center braiding at the unit object is trivial") {
        CenterResult c = center(anntest::z4_mod2_presentation());
        const int one = c.dual.pres.objs.one;
        const int k = static_cast<int>(c.dual.objects.size());
        for (int i = 0; i < k; ++i)
            CHECK(c.braiding[static_cast<std::size_t>(i) * k + one] == c.dual.pres.labels.zero);
        CHECK(check_braiding(c.dual.pres, c.braiding).pass());
    }

    SUBCASE("failing presentations are refused with the report attached") {
        FiniteRing r = make_zn(2);
        std::vector<int> lam(8, 0), eta(4, 0);
        lam[7] = 1; // lambda(1,1,1) = 1
        AnnPresentation bad = from_rm(r, regular_bimodule(r), lam, eta);
        CHECK_THROWS_AS(center(bad), axiom_failure);
    }
}

TEST_CASE("noncentral mu values constrain the dual objects") {
    // B = strict (Z_2, Z_2) mapped into the strict triangular presentation
    // with mu(1,1) = E12 and q = 0. The oplus-compatibility square then
    // demands r E12 = E12 r, cutting the eight centralizer elements down to
    // the four with equal diagonal.
    AnnPresentation b = strict_zn(2);
    AnnPresentation a = anntest::strict_of(anntest::t2z2_ring());
    RingHom p = make_ring_hom(b.objs, a.objs, {0, 5});
    GroupHom q = make_group_hom(b.labels, a.labels, {0, 0});
    std::vector<int> mu = {0, 0, 0, 2};
    AnnFunctor f = make_pq_functor(b, a, p, q, mu, std::vector<int>(4, 0));
    REQUIRE(check_functor(f).pass());

    auto objs = enumerate_dual_objects(f);
    std::vector<int> rs;
    for (const auto& d : objs) rs.push_back(d.r);
    CHECK(rs == std::vector<int>{0, 2, 5, 7});
    CHECK(objs == anntest::brute_force_dual_objects(f));

    // In characteristic 2 the mu-sum and mu-commutator coincide, so the two
    // membership routes agree on the whole space; q = 0 keeps every r
    // guarded.
    AgreementReport rep = oracle_agreement(f);
    CHECK(rep.discrepancies.empty());
    CHECK(rep.guarded_ok());

    DualCategory d = build_dual_category(f);
    CHECK(d.objects.size() == 4);
    CHECK(check_axioms(d.pres).pass());
    CHECK(check_functor(forgetful_functor(d)).pass());
}

TEST_CASE("twisted (Z_4, Z_2): nonzero constraints survive the whole pipeline") {
    AnnPresentation p = anntest::z4_mod2_twisted();
    REQUIRE(check_axioms(p).pass());
    CHECK(!p.lambda.empty());
    CHECK(p.lam(2, 1, 1) == 1);
    CHECK(p.et(3, 1) == 1);

    AnnFunctor f = identity_functor(p);

    SUBCASE("enumeration: u-tables are forced to (0,0,f(r),f(r))") {
        auto objs = enumerate_dual_objects(f);
        std::vector<DualObject> expected = {{0, {0, 0, 0, 0}},
                                            {1, {0, 0, 0, 0}},
                                            {2, {0, 0, 1, 1}},
                                            {3, {0, 0, 1, 1}}};
        CHECK(objs == expected);
        CHECK(objs == anntest::brute_force_dual_objects(f));
    }

    SUBCASE("center: inherited lambda/eta are nonzero and the braiding too") {
        CenterResult c = center(p);
        REQUIRE(c.dual.objects.size() == 4);
        // lambda-hat((2,u),(1,v),(1,w)) = lambda(2,1,1) = 1
        CHECK(c.dual.pres.lam(2, 1, 1) == 1);
        CHECK(c.dual.pres.et(1, 3) == 1);
        // c((2,u),(3,v)) = u_2(3) = 1
        const int k = 4;
        CHECK(c.braiding[2 * k + 3] == 1);
        CHECK(c.braiding[1 * k + 3] == 0);
        CHECK(check_axioms(c.dual.pres).pass());
        CHECK(check_braiding(c.dual.pres, c.braiding).pass());
        CHECK(check_functor(forgetful_functor(c.dual)).pass());
    }

    SUBCASE("oracle agreement is exact (all r guarded)") {
        AgreementReport rep = oracle_agreement(f);
        CHECK(rep.discrepancies.empty());
    }

    SUBCASE("closure with nonzero lambda in the formulas") {
        auto objs = enumerate_dual_objects(f);
        for (const auto& x : objs) {
            CHECK(is_dual_object_diagrammatic(f, dual_negate(f, x)));
            for (const auto& y : objs) {
                CHECK(is_dual_object_diagrammatic(f, dual_sum(f, x, y)));
                CHECK(is_dual_object_diagrammatic(f, dual_product(f, x, y)));
            }
        }
    }
}

TEST_CASE("forgetful functor") {
    for (auto make : {+[] { return identity_functor(strict_zn(2)); },
                      +[] { return identity_functor(strict_zn(6)); },
                      +[] { return identity_functor(anntest::z4_mod2_presentation()); },
                      +[] { return t2_probe_functor(); }}) {
        AnnFunctor base = make();
        DualCategory d = build_dual_category(base);
        AnnFunctor fw = forgetful_functor(d);
        CHECK(check_functor(fw).pass());

        // omap sends the dual zero/one to O/I and respects the product.
        CHECK(fw.fobj(d.pres.objs.zero) == base.dst.objs.zero);
        CHECK(fw.fobj(d.pres.objs.one) == base.dst.objs.one);
        const int k = static_cast<int>(d.objects.size());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                CHECK(fw.fobj(d.pres.objs.times(i, j)) ==
                      base.dst.objs.times(fw.fobj(i), fw.fobj(j)));
    }
}
