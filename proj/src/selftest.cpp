// Built-in acceptance battery. Criteria:
//   C1 strictness suite over Z_n fixtures
//   C2 dual categories of every battery fixture pass check_axioms
//   C3 centers pass check_braiding (including the zero-zero condition)
//   C4 closed-form vs diagrammatic membership agreement
//   C5 closure and object group/monoid laws of the dual tables
//   C6 forgetful functors pass check_functor
//   C7 known enumerations (with an in-suite brute-force oracle)
//   C8 search scale and byte-determinism across worker counts

#include "anncat/selftest.hpp"

#include <chrono>
#include <sstream>

#include "anncat/dual.hpp"
#include "anncat/render.hpp"
#include "anncat/search.hpp"

namespace anncat {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

AnnPresentation strict_zn(int n) {
    FiniteRing r = make_zn(n);
    Bimodule m = regular_bimodule(r);
    return from_rm(r, m, std::vector<int>(static_cast<std::size_t>(n) * n * n, 0),
                   std::vector<int>(static_cast<std::size_t>(n) * n, 0));
}

AnnPresentation z4_mod2() {
    FiniteRing z4 = make_zn(4);
    Table add = {{0, 1}, {1, 0}};
    Table act(4, std::vector<int>(2));
    for (int r = 0; r < 4; ++r)
        for (int m = 0; m < 2; ++m) act[r][m] = (r * m) % 2;
    Bimodule m = make_bimodule(z4, add, 0, act, act);
    return from_rm(z4, m, std::vector<int>(64, 0), std::vector<int>(16, 0));
}

FiniteRing t2z2_ring() {
    const int n = 8;
    auto enc = [](int a, int b, int d) { return (a << 2) | (b << 1) | d; };
    Table add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ai = (i >> 2) & 1, bi = (i >> 1) & 1, di = i & 1;
            int aj = (j >> 2) & 1, bj = (j >> 1) & 1, dj = j & 1;
            add[i][j] = enc(ai ^ aj, bi ^ bj, di ^ dj);
            mul[i][j] = enc(ai & aj, (ai & bj) ^ (bi & dj), di & dj);
        }
    return make_table_ring(add, mul, 0, 5);
}

AnnPresentation strict_of(const FiniteRing& r) {
    const std::size_t n = static_cast<std::size_t>(r.n);
    return from_rm(r, regular_bimodule(r), std::vector<int>(n * n * n, r.zero),
                   std::vector<int>(n * n, r.zero));
}

AnnFunctor t2_probe_functor() {
    AnnPresentation b = strict_zn(2);
    AnnPresentation a = strict_of(t2z2_ring());
    RingHom p = make_ring_hom(b.objs, a.objs, {0, 5});
    GroupHom q = make_group_hom(b.labels, a.labels, {0, 2});
    return make_pq_functor(b, a, p, q, std::vector<int>(4, 0), std::vector<int>(4, 0));
}

AnnFunctor reduction_z4_z2() {
    AnnPresentation b = strict_zn(4);
    AnnPresentation a = strict_zn(2);
    RingHom p = make_ring_hom(b.objs, a.objs, {0, 1, 0, 1});
    GroupHom q = make_group_hom(b.labels, a.labels, {0, 1, 0, 1});
    return make_pq_functor(b, a, p, q, std::vector<int>(16, 0), std::vector<int>(16, 0));
}

struct BatteryItem {
    std::string name;
    AnnPresentation pres;
};

// The fixture battery named by the acceptance criteria: strict Z_2, Z_3,
// Z_4; Z_4 acting on Z_2; every valid (lambda, eta) the (Z_2, Z_2) search
// finds.
std::vector<BatteryItem> battery(const ExecPolicy& pol) {
    std::vector<BatteryItem> items;
    items.push_back({"strict-z2", strict_zn(2)});
    items.push_back({"strict-z3", strict_zn(3)});
    items.push_back({"strict-z4", strict_zn(4)});
    items.push_back({"z4-mod2", z4_mod2()});

    FiniteRing z2 = make_zn(2);
    Bimodule m2 = regular_bimodule(z2);
    SearchResult sr = search_presentations(z2, m2, SearchCaps{}, pol);
    int idx = 0;
    for (const auto& v : sr.valid) {
        items.push_back({"search-z2-" + std::to_string(idx++),
                         from_rm(z2, m2, v.lambda, v.eta)});
    }
    return items;
}

std::vector<DualObject> brute_force_dual_objects(const AnnFunctor& f) {
    const int n = f.src.objs.n;
    const int m = f.dst.labels.n;
    std::vector<DualObject> out;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(m);
    DualObject d;
    d.u.assign(n, 0);
    for (int r = 0; r < f.dst.objs.n; ++r) {
        d.r = r;
        for (std::uint64_t c = 0; c < total; ++c) {
            std::uint64_t cc = c;
            for (int i = n - 1; i >= 0; --i) {
                d.u[i] = static_cast<int>(cc % m);
                cc /= m;
            }
            if (is_dual_object_diagrammatic(f, d)) out.push_back(d);
        }
    }
    return out;
}

using CriterionFn = void (*)(const ExecPolicy&, bool&, std::string&);

CriterionResult run_criterion(const std::string& id, const std::string& title, double budget_ms,
                              const ExecPolicy& pol, CriterionFn fn) {
    CriterionResult res;
    res.id = id;
    res.title = title;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        fn(pol, ok, detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    res.wall_ms = ms_since(t0);
    if (res.wall_ms > budget_ms) {
        ok = false;
        detail += " [over time budget " + std::to_string(budget_ms) + " ms]";
    }
    res.pass = ok;
    res.detail = detail;
    return res;
}

void c1_strictness(const ExecPolicy& pol, bool& ok, std::string& detail) {
    std::uint64_t tuples = 0;
    for (int n : {1, 2, 3, 4, 6, 8}) {
        AxiomReport rep = check_axioms(strict_zn(n), pol);
        for (const auto& f : rep.families) tuples += f.tuples;
        if (!rep.pass() || rep.total_failures() != 0) {
            ok = false;
            detail = "strict Z_" + std::to_string(n) + " failed";
            return;
        }
    }
    detail = std::to_string(tuples) + " tuples evaluated, 0 failures";
}

void c2_dual_axioms(const ExecPolicy& pol, bool& ok, std::string& detail) {
    int count = 0;
    for (const auto& item : battery(pol)) {
        DualCategory d = build_dual_category(identity_functor(item.pres), DualSearchCaps{}, pol);
        AxiomReport rep = check_axioms(d.pres, pol);
        if (!rep.pass()) {
            ok = false;
            detail = "dual of " + item.name + " failed check_axioms";
            return;
        }
        ++count;
    }
    detail = std::to_string(count) + " duals certified";
}

void c3_center_braiding(const ExecPolicy& pol, bool& ok, std::string& detail) {
    int count = 0;
    for (const auto& item : battery(pol)) {
        CenterResult c = center(item.pres, DualSearchCaps{}, pol);
        AxiomReport rep = check_braiding(c.dual.pres, c.braiding, pol);
        const FamilyResult* zz = rep.find("braid.zero");
        if (!rep.pass() || zz == nullptr || !zz->pass()) {
            ok = false;
            detail = "center of " + item.name + " failed check_braiding";
            return;
        }
        ++count;
    }
    detail = std::to_string(count) + " centers certified (incl. c_{O,O} = id)";
}

void c4_oracle_agreement(const ExecPolicy& pol, bool& ok, std::string& detail) {
    std::uint64_t candidates = 0;
    std::size_t unguarded = 0;
    auto scan = [&](const AnnFunctor& f, const std::string& name) {
        AgreementReport rep = oracle_agreement(f);
        candidates += rep.candidates;
        if (!rep.guarded_ok()) {
            ok = false;
            detail = "guarded discrepancy on " + name;
            return false;
        }
        for (const auto& c : rep.discrepancies)
            if (!c.r_guarded) ++unguarded;
        return true;
    };
    for (const auto& item : battery(pol))
        if (!scan(identity_functor(item.pres), item.name)) return;
    if (!scan(reduction_z4_z2(), "reduction-z4-z2")) return;
    // The probe fixture exists to produce listed (unguarded) discrepancies.
    if (!scan(t2_probe_functor(), "t2-probe")) return;
    detail = std::to_string(candidates) + " candidates compared, " +
             std::to_string(unguarded) + " discrepancies listed outside the guard, 0 within";
}

void c5_closure_and_laws(const ExecPolicy& pol, bool& ok, std::string& detail) {
    int checked = 0;
    for (const auto& item : battery(pol)) {
        AnnFunctor f = identity_functor(item.pres);
        auto objs = enumerate_dual_objects(f, DualSearchCaps{}, pol);
        for (const auto& x : objs) {
            if (!is_dual_object_diagrammatic(f, dual_negate(f, x))) {
                ok = false;
                detail = "negation escaped membership on " + item.name;
                return;
            }
            for (const auto& y : objs) {
                if (!is_dual_object_diagrammatic(f, dual_sum(f, x, y)) ||
                    !is_dual_object_diagrammatic(f, dual_product(f, x, y))) {
                    ok = false;
                    detail = "sum/product escaped membership on " + item.name;
                    return;
                }
            }
        }
        // Abelian-group + monoid + distributivity laws of the object tables,
        // re-validated at every tuple.
        DualCategory d = build_dual_category(f, DualSearchCaps{}, pol);
        validate_ring_tables(d.pres.objs.n, d.pres.objs.add, d.pres.objs.mul, d.pres.objs.zero,
                             d.pres.objs.one);
        ++checked;
    }
    detail = std::to_string(checked) + " fixtures: closure and table laws hold";
}

void c6_forgetful(const ExecPolicy& pol, bool& ok, std::string& detail) {
    int count = 0;
    for (const auto& item : battery(pol)) {
        DualCategory d = build_dual_category(identity_functor(item.pres), DualSearchCaps{}, pol);
        if (!check_functor(forgetful_functor(d), pol).pass()) {
            ok = false;
            detail = "forgetful functor failed on " + item.name;
            return;
        }
        ++count;
    }
    detail = std::to_string(count) + " forgetful functors certified";
}

void c7_known_enumerations(const ExecPolicy& pol, bool& ok, std::string& detail) {
    AnnFunctor f2 = identity_functor(strict_zn(2));
    auto objs2 = enumerate_dual_objects(f2, DualSearchCaps{}, pol);
    bool exact = objs2.size() == 2 && objs2[0] == DualObject{0, {0, 0}} &&
                 objs2[1] == DualObject{1, {0, 0}};
    if (!exact || objs2 != brute_force_dual_objects(f2)) {
        ok = false;
        detail = "strict (Z_2, Z_2) enumeration mismatch";
        return;
    }
    for (int n = 1; n <= 6; ++n) {
        AnnFunctor f = identity_functor(strict_zn(n));
        auto objs = enumerate_dual_objects(f, DualSearchCaps{}, pol);
        if (static_cast<int>(objs.size()) != n) {
            ok = false;
            detail = "strict (Z_" + std::to_string(n) + ") expected " + std::to_string(n) +
                     " objects, got " + std::to_string(objs.size());
            return;
        }
        for (int r = 0; r < n; ++r) {
            bool zero_u = objs[r].r == r;
            for (int v : objs[r].u) zero_u = zero_u && v == 0;
            if (!zero_u) {
                ok = false;
                detail = "strict (Z_" + std::to_string(n) + ") has a nonzero u-table";
                return;
            }
        }
    }
    detail = "exact object sets for Z_2 (with brute-force cross-check) and Z_1..Z_6";
}

void c8_search_determinism(const ExecPolicy& pol, bool& ok, std::string& detail) {
    FiniteRing z2 = make_zn(2);
    Bimodule m2 = regular_bimodule(z2);

    auto run = [&](ExecPolicy p) {
        SearchResult res = search_presentations(z2, m2, SearchCaps{}, p);
        Json j;
        j["candidates"] = res.candidates;
        Json list = Json::array();
        for (const auto& v : res.valid) {
            Json e;
            e["lambda"] = v.lambda;
            e["eta"] = v.eta;
            list.push_back(std::move(e));
        }
        j["valid"] = std::move(list);
        return j.dump();
    };

    std::string base = run(pol);
    SearchResult first = search_presentations(z2, m2, SearchCaps{}, pol);
    if (first.candidates != 4096) {
        ok = false;
        detail = "expected 4096 candidates, got " + std::to_string(first.candidates);
        return;
    }
    bool strict_found = false;
    for (const auto& v : first.valid) {
        bool all_zero = true;
        for (int x : v.lambda) all_zero = all_zero && x == 0;
        for (int x : v.eta) all_zero = all_zero && x == 0;
        if (all_zero) strict_found = true;
    }
    if (!strict_found) {
        ok = false;
        detail = "the strict (0,0) pair is missing from the valid list";
        return;
    }

    for (ExecPolicy p : {ExecPolicy{ExecMode::parallel, 1}, ExecPolicy{ExecMode::parallel, 4},
                         serial_policy(), pol}) {
        if (run(p) != base) {
            ok = false;
            detail = "reports differ across execution policies";
            return;
        }
    }
    detail = "4096 candidates, " + std::to_string(first.valid.size()) +
             " valid, byte-identical across repeats, worker counts and serial mode";
}

} // namespace

SelftestResult run_selftest(const ExecPolicy& pol) {
    SelftestResult res;
    res.criteria.push_back(run_criterion(
        "C1", "strictness suite: strict Z_n passes every axiom family (n=1,2,3,4,6,8)",
        10000.0, pol, c1_strictness));
    res.criteria.push_back(run_criterion(
        "C2", "dual categories of all battery fixtures pass check_axioms", 60000.0, pol,
        c2_dual_axioms));
    res.criteria.push_back(run_criterion(
        "C3", "centers of all battery fixtures pass check_braiding", 30000.0, pol,
        c3_center_braiding));
    res.criteria.push_back(run_criterion(
        "C4", "closed-form vs diagrammatic membership agreement", 60000.0, pol,
        c4_oracle_agreement));
    res.criteria.push_back(run_criterion(
        "C5", "closure of dual arithmetic and object group/monoid laws", 60000.0, pol,
        c5_closure_and_laws));
    res.criteria.push_back(run_criterion(
        "C6", "forgetful functors pass check_functor", 60000.0, pol, c6_forgetful));
    res.criteria.push_back(run_criterion(
        "C7", "known enumerations: strict (Z_2,Z_2) and (Z_n,Z_n), n <= 6", 60000.0, pol,
        c7_known_enumerations));
    res.criteria.push_back(run_criterion(
        "C8", "search scale and byte-determinism on (Z_2, Z_2)", 60000.0, pol,
        c8_search_determinism));
    return res;
}

} // namespace anncat
