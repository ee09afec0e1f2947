#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anncat/presentation.hpp"
#include "test_support.hpp"

using namespace anncat;
using anntest::strict_zn;

namespace {

void check_reports_equal(const AxiomReport& a, const AxiomReport& b) {
    CHECK(a.eta_diagonal == b.eta_diagonal);
    REQUIRE(a.families.size() == b.families.size());
    for (std::size_t i = 0; i < a.families.size(); ++i) {
        const auto& x = a.families[i];
        const auto& y = b.families[i];
        CAPTURE(x.name);
        CHECK(x.name == y.name);
        CHECK(x.group == y.group);
        CHECK(x.tuples == y.tuples);
        CHECK(x.failures == y.failures);
        CHECK(x.witness == y.witness);
        CHECK(x.lhs == y.lhs);
        CHECK(x.rhs == y.rhs);
    }
}

AnnPresentation z2_with_lambda_xyz() {
    FiniteRing r = make_zn(2);
    std::vector<int> lam(8), eta(4, 0);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) lam[(x * 2 + y) * 2 + z] = x * y * z;
    return from_rm(r, regular_bimodule(r), lam, eta);
}

AnnPresentation z2_with_eta_xy() {
    FiniteRing r = make_zn(2);
    std::vector<int> lam(8, 0), eta(4);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) eta[x * 2 + y] = x * y;
    return from_rm(r, regular_bimodule(r), lam, eta);
}

} // namespace

TEST_CASE("from_rm structural validation") {
    SUBCASE("strict presentations build") {
        AnnPresentation p = strict_zn(2);
        CHECK(p.objs.n == 2);
        CHECK(p.labels.n == 2);
    }

    SUBCASE("mismatched base ring is rejected") {
        FiniteRing z2 = make_zn(2);
        Bimodule m = regular_bimodule(make_zn(4));
        CHECK_THROWS_AS(from_rm(z2, m, std::vector<int>(8, 0), std::vector<int>(4, 0)),
                        validation_error);
    }

    SUBCASE("missing lambda entries are rejected") {
        FiniteRing z2 = make_zn(2);
        CHECK_THROWS_AS(from_rm(z2, regular_bimodule(z2), std::vector<int>(7, 0),
                                std::vector<int>(4, 0)),
                        validation_error);
    }
}

TEST_CASE("morphism operations") {
    AnnPresentation p = strict_zn(4);

    SUBCASE("composition adds labels") {
        Mor f = compose(p, Mor{2, 1}, Mor{2, 3});
        CHECK(f == Mor{2, 0});
        CHECK(compose(p, Mor{2, 1}, identity_mor(p, 2)) == Mor{2, 1});
        CHECK_THROWS_AS(compose(p, Mor{1, 0}, Mor{2, 0}), validation_error);
    }

    SUBCASE("oplus and otimes on morphisms") {
        CHECK(oplus_mor(p, Mor{1, 2}, Mor{2, 3}) == Mor{3, 1});
        // (x,a) (x) (y,b) = (xy, xb + ay) in the regular bimodule
        CHECK(otimes_mor(p, Mor{2, 1}, Mor{3, 2}) == Mor{2, (2 * 2 + 1 * 3) % 4});
        CHECK(otimes_mor(p, Mor{2, 0}, Mor{3, 0}) == Mor{2, 0});
        CHECK(otimes_mor(p, Mor{1, 2}, Mor{1, 3}) == Mor{1, 1});
    }

    SUBCASE("inverse negates the label") {
        CHECK(inverse_mor(p, Mor{2, 3}) == Mor{2, 1});
    }

    SUBCASE("build_v is the middle swap") {
        CHECK(build_v(p, 1, 2, 3, 0).lab == 0); // eta = 0
        AnnPresentation q = z2_with_eta_xy();
        CHECK(build_v(q, 0, 1, 1, 0).lab == 1); // eta(1, 1)
        CHECK(build_v(q, 1, 1, 0, 1).lab == 0); // eta(y, x) at (x,y,x,y)=(1,1,...)
        // v o v = id whenever the involution family passes
        Mor v1 = build_v(q, 0, 1, 1, 0);
        Mor v2 = build_v(q, 0, 1, 1, 0); // swapping back exchanges V and Z; here V=Z=1
        CHECK(compose(q, v2, v1).lab == 0);
    }
}

TEST_CASE("strict presentations pass every axiom family") {
    for (int n : {1, 2, 3, 4, 6}) {
        CAPTURE(n);
        AnnPresentation p = strict_zn(n);
        AxiomReport rep = check_axioms(p);
        CHECK(rep.pass());
        CHECK(rep.total_failures() == 0);
        check_reports_equal(rep, check_axioms_reference(p));
        check_reports_equal(rep, check_axioms(p, serial_policy()));
    }
}

TEST_CASE("strict noncommutative and non-regular fixtures pass") {
    AxiomReport t2 = check_axioms(anntest::strict_of(anntest::t2z2_ring()));
    CHECK(t2.pass());
    AxiomReport z4m2 = check_axioms(anntest::z4_mod2_presentation());
    CHECK(z4m2.pass());
    check_reports_equal(z4m2, check_axioms_reference(anntest::z4_mod2_presentation()));
}

TEST_CASE("lambda(x,y,z) = xyz on (Z_2, Z_2) fails Ann-2 at (1,1,1,1)") {
    AnnPresentation p = z2_with_lambda_xyz();
    AxiomReport rep = check_axioms(p);
    CHECK(!rep.pass());

    const FamilyResult* ll = rep.find("ann2.ll");
    REQUIRE(ll != nullptr);
    CHECK(ll->failures == 1);
    CHECK(ll->witness == std::vector<int>{1, 1, 1, 1});
    CHECK(ll->lhs == 1);
    CHECK(ll->rhs == 0);

    // The same entry also breaks the Ann-3 unit relation: lambda(1,1,1) = 1.
    const FamilyResult* a3 = rep.find("ann3.l");
    REQUIRE(a3 != nullptr);
    CHECK(!a3->pass());
    CHECK(a3->witness == std::vector<int>{1, 1});

    // Cocycle-style families hold for this lambda.
    CHECK(rep.find("ann1.l-assoc")->pass());
    CHECK(rep.find("ann1.l-comm")->pass());
    CHECK(rep.find("ann2.lr")->pass());
    CHECK(rep.find("ann2.v")->pass());

    SUBCASE("witnesses re-evaluate to genuine inequalities") {
        auto [lhs, rhs] = reevaluate_axiom(p, "ann2.ll", ll->witness);
        CHECK(lhs == ll->lhs);
        CHECK(rhs == ll->rhs);
        CHECK(lhs != rhs);
    }

    SUBCASE("reference engine agrees exactly") {
        check_reports_equal(rep, check_axioms_reference(p));
    }
}

TEST_CASE("eta(x,y) = xy on (Z_2, Z_2): evaluated verdicts") {
    AnnPresentation p = z2_with_eta_xy();
    AxiomReport rep = check_axioms(p);

    // Bilinear eta satisfies the symmetry families in characteristic 2 but
    // breaks the fourth Ann-2 diagram, where v contributes eta(BX, AY).
    CHECK(rep.find("sym.involution")->pass());
    CHECK(rep.find("sym.hexagon")->pass());
    CHECK(rep.find("ann1.l-comm")->pass());
    CHECK(rep.find("ann1.r-comm")->pass());
    const FamilyResult* v = rep.find("ann2.v");
    REQUIRE(v != nullptr);
    CHECK(v->failures == 1);
    CHECK(v->witness == std::vector<int>{1, 1, 1, 1});

    // The eta diagonal is recorded for inspection, not judged.
    CHECK(rep.eta_diagonal == std::vector<int>{0, 1});

    check_reports_equal(rep, check_axioms_reference(p));
    check_reports_equal(rep, check_axioms(p, serial_policy()));
}

TEST_CASE("interchange is equivalent to label additivity of the actions") {
    // Forward direction: every validated presentation has additive actions,
    // so the interchange family passes on all label quadruples.
    AxiomReport rep = check_axioms(strict_zn(3));
    CHECK(rep.find("nat.interchange")->pass());

    // Converse: a hand-assembled presentation with a non-additive action
    // fails exactly that family. The fixture is structurally invalid on
    // purpose (validation would reject it), so only the interchange family
    // is compared across engines.
    AnnPresentation p = strict_zn(2);
    p.lact = {0, 0, 1, 1}; // object 1 acts by the constant map a -> 1
    AxiomReport broken = check_axioms(p);
    const FamilyResult* kf = broken.find("nat.interchange");
    REQUIRE(kf != nullptr);
    CHECK(!kf->pass());
    AxiomReport ref = check_axioms_reference(p);
    const FamilyResult* rf = ref.find("nat.interchange");
    REQUIRE(rf != nullptr);
    CHECK(!rf->pass());
    CHECK(kf->witness == rf->witness);
    CHECK(kf->failures == rf->failures);
}

TEST_CASE("pi0 and pi1 round-trip through the finite-algebra validators") {
    AnnPresentation p = strict_zn(6);
    FiniteRing r = pi0(p);
    CHECK(r == make_zn(6));
    Bimodule m = pi1(p);
    CHECK(m == regular_bimodule(make_zn(6)));
    // Outputs re-validate cleanly.
    validate_ring_tables(r.n, r.add, r.mul, r.zero, r.one);
    validate_bimodule_tables(m);

    SUBCASE("refused on failing presentations, report attached") {
        AnnPresentation bad = z2_with_lambda_xyz();
        try {
            pi0(bad);
            FAIL("expected axiom_failure");
        } catch (const axiom_failure& e) {
            CHECK(!e.report.pass());
            CHECK(e.report.find("ann2.ll") != nullptr);
        }
    }
}

TEST_CASE("check_braiding") {
    SUBCASE("zero braiding on strict presentations passes") {
        for (int n : {2, 3, 6}) {
            AnnPresentation p = strict_zn(n);
            std::vector<int> c(static_cast<std::size_t>(n) * n, 0);
            AxiomReport rep = check_braiding(p, c);
            CHECK(rep.pass());
            check_reports_equal(rep, check_braiding_reference(p, c));
        }
    }

    SUBCASE("c(x,y) = xy on strict (Z_2, Z_2)") {
        AnnPresentation p = strict_zn(2);
        std::vector<int> c = {0, 0, 0, 1};
        AxiomReport rep = check_braiding(p, c);
        CHECK(rep.find("braid.nat")->pass());
        CHECK(rep.find("braid.distrib")->pass());
        CHECK(rep.find("braid.zero")->pass());
        const FamilyResult* h1 = rep.find("braid.hex1");
        CHECK(h1->witness == std::vector<int>{1, 1, 1});
        CHECK(h1->lhs == 1);
        CHECK(h1->rhs == 0);
        CHECK(!rep.find("braid.hex2")->pass());
        CHECK(!rep.find("braid.unit-right")->pass());
        CHECK(!rep.find("braid.unit-left")->pass());
        check_reports_equal(rep, check_braiding_reference(p, c));

        auto [lhs, rhs] = reevaluate_braiding(p, c, "braid.hex1", h1->witness);
        CHECK(lhs != rhs);
    }

    SUBCASE("c(O,O) != 0 fails the zero-zero family") {
        AnnPresentation p = strict_zn(2);
        std::vector<int> c = {1, 0, 0, 0};
        AxiomReport rep = check_braiding(p, c);
        CHECK(!rep.find("braid.zero")->pass());
    }

    SUBCASE("noncommutative object tensor is ill-typed for a braiding") {
        AnnPresentation p = anntest::strict_of(anntest::t2z2_ring());
        std::vector<int> c(64, 0);
        CHECK_THROWS_AS(check_braiding(p, c), validation_error);
    }
}

TEST_CASE("kernel and reference engines agree on randomized tables") {
    // Deterministic low-tech PRNG so the fixture set is reproducible.
    std::uint64_t state = 0x243f6a8885a308d3ull;
    auto next = [&state](int bound) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
    };
    FiniteRing r = make_zn(3);
    Bimodule m = regular_bimodule(r);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<int> lam(27), eta(9), braid(9);
        for (auto& v : lam) v = next(3);
        for (auto& v : eta) v = next(3);
        for (auto& v : braid) v = next(3);
        AnnPresentation p = from_rm(r, m, lam, eta);
        check_reports_equal(check_axioms(p), check_axioms_reference(p));
        check_reports_equal(check_braiding(p, braid), check_braiding_reference(p, braid));
    }

    // Noncommutative base: lact and ract genuinely differ, so any left/right
    // transport mixup in either engine shows up here.
    FiniteRing t2 = anntest::t2z2_ring();
    Bimodule mt2 = regular_bimodule(t2);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<int> lam(512), eta(64);
        for (auto& v : lam) v = next(8);
        for (auto& v : eta) v = next(8);
        AnnPresentation p = from_rm(t2, mt2, lam, eta);
        check_reports_equal(check_axioms(p), check_axioms_reference(p));
    }
}
