#include "anncat/commands.hpp"

#include <chrono>

#include "anncat/selftest.hpp"

namespace anncat {

namespace {

class Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

Json issue_json(const EntityIssue& e) {
    Json j;
    j["check"] = e.check;
    j["witness"] = e.witness;
    j["message"] = e.message;
    return j;
}

Json job_header(const std::string& kind, const std::string& name) {
    Json j;
    j["job"] = kind + ":" + name;
    j["kind"] = kind;
    j["name"] = name;
    return j;
}

// Closed-form vs diagrammatic membership over the brute-force space; skipped
// (with the size estimate) when the space exceeds the cap.
Json agreement_json(const AnnFunctor& f, const Caps& caps, bool& ok) {
    Json j;
    try {
        AgreementReport rep = oracle_agreement(f, caps.dual.max_candidates);
        j["candidates"] = rep.candidates;
        j["guarded_ok"] = rep.guarded_ok();
        Json ds = Json::array();
        for (const auto& c : rep.discrepancies) {
            Json e;
            e["r"] = c.candidate.r;
            e["u"] = c.candidate.u;
            e["closed_form"] = c.closed_form;
            e["diagrammatic"] = c.diagrammatic;
            e["r_guarded"] = c.r_guarded;
            ds.push_back(std::move(e));
        }
        j["discrepancies"] = std::move(ds);
        ok = rep.guarded_ok();
    } catch (const capacity_error& e) {
        j["skipped"] = e.what();
        ok = true;
    }
    return j;
}

// Certification of a built dual: the dual presentation passes check_axioms,
// the forgetful functor passes check_functor, and the two membership oracles
// agree inside the guard. Closure and the object group/monoid laws were
// already enforced while assembling the tables.
Json certify_dual(const DualCategory& d, const Caps& caps, const ExecPolicy& pol, bool& ok) {
    Json j;
    j["objects"] = static_cast<int>(d.objects.size());
    AxiomReport ax = check_axioms(d.pres, pol);
    j["axioms"] = axiom_report_to_json(ax);
    AxiomReport fw = check_functor(forgetful_functor(d), pol);
    j["forgetful"] = axiom_report_to_json(fw);
    bool agree_ok = true;
    j["agreement"] = agreement_json(d.base, caps, agree_ok);
    j["pi0"] = ring_to_json(d.pres.objs);
    Json pi1;
    pi1["size"] = static_cast<int>(d.label_elems.size());
    pi1["elems"] = d.label_elems;
    j["pi1"] = pi1;
    j["dual"] = dual_to_json(d);
    ok = ax.pass() && fw.pass() && agree_ok;
    return j;
}

Json run_dual_job(const Fixture& fx, const std::string& fname, const Caps& caps,
                  const ExecPolicy& pol, bool& ok) {
    Json j = job_header("dual", fname);
    Stopwatch sw;
    ok = false;
    const Entry<AnnFunctor>* fe = fx.find_functor(fname);
    if (!fe->ok()) {
        j["status"] = "error";
        j["issue"] = issue_json(*fe->issue);
    } else {
        try {
            DualCategory d = build_dual_category(*fe->value, caps.dual, pol);
            j["result"] = certify_dual(d, caps, pol, ok);
            j["status"] = ok ? "pass" : "fail";
        } catch (const inconsistency_error& e) {
            j["status"] = "error";
            j["message"] = e.what();
        }
    }
    j["wall_ms"] = sw.ms();
    return j;
}

Json run_center_job(const Fixture& fx, const std::string& pname, const Caps& caps,
                    const ExecPolicy& pol, bool& ok) {
    Json j = job_header("center", pname);
    Stopwatch sw;
    ok = false;
    const PresentationEntry* pe = fx.find_presentation(pname);
    if (!pe->ok()) {
        j["status"] = "error";
        j["issue"] = issue_json(*pe->issue);
    } else {
        try {
            CenterResult c = center(*pe->value, caps.dual, pol);
            bool dual_ok = false;
            j["result"] = certify_dual(c.dual, caps, pol, dual_ok);
            AxiomReport br = check_braiding(c.dual.pres, c.braiding, pol);
            j["result"]["braiding"] = c.braiding;
            j["result"]["braiding_check"] = axiom_report_to_json(br);
            ok = dual_ok && br.pass();
            j["status"] = ok ? "pass" : "fail";
        } catch (const axiom_failure& e) {
            j["status"] = "fail";
            j["message"] = e.what();
            j["axioms"] = axiom_report_to_json(e.report);
        } catch (const inconsistency_error& e) {
            j["status"] = "error";
            j["message"] = e.what();
        }
    }
    j["wall_ms"] = sw.ms();
    return j;
}

Json run_search_job(const Fixture& fx, const std::string& rname, const std::string& mname,
                    const Caps& caps, const ExecPolicy& pol, bool& ok) {
    Json j = job_header("search", rname + "," + mname);
    Stopwatch sw;
    ok = false;
    const Entry<FiniteRing>* re = fx.find_ring(rname);
    const Entry<Bimodule>* me = fx.find_module(mname);
    if (!re->ok() || !me->ok()) {
        j["status"] = "error";
        j["issue"] = issue_json(re->ok() ? *me->issue : *re->issue);
    } else {
        SearchResult res = search_presentations(*re->value, *me->value, caps.search, pol);
        j["candidates"] = res.candidates;
        j["valid_count"] = static_cast<int>(res.valid.size());
        Json list = Json::array();
        for (const auto& v : res.valid) {
            Json p;
            p["lambda"] = v.lambda;
            p["eta"] = v.eta;
            list.push_back(std::move(p));
        }
        j["valid"] = std::move(list);
        j["status"] = "pass";
        ok = true;
    }
    j["wall_ms"] = sw.ms();
    return j;
}

Json report_skeleton(const std::string& command, const std::string& input) {
    Json j;
    j["tool"] = "anncat";
    j["command"] = command;
    j["input"] = input;
    j["jobs"] = Json::array();
    return j;
}

void finish(Json& report, CommandResult& out) {
    bool pass = true;
    int failed = 0;
    for (const auto& j : report["jobs"]) {
        if (j["status"] != "pass") {
            pass = false;
            ++failed;
        }
    }
    Json summary;
    summary["pass"] = pass;
    summary["jobs"] = static_cast<int>(report["jobs"].size());
    summary["failed"] = failed;
    report["summary"] = std::move(summary);
    out.report = std::move(report);
    out.pass = pass;
}

} // namespace

CommandResult cmd_validate(const std::string& path, const Caps& caps, const ExecPolicy& pol) {
    Fixture fx = load_fixture(path, caps);
    Json report = report_skeleton("validate", path);

    auto entity_job = [&](const std::string& kind, const std::string& name,
                          const std::optional<EntityIssue>& issue) {
        Json j = job_header(kind, name);
        Stopwatch sw;
        if (issue) {
            j["status"] = "fail";
            j["issue"] = issue_json(*issue);
        } else {
            j["status"] = "pass";
        }
        j["wall_ms"] = sw.ms();
        report["jobs"].push_back(std::move(j));
    };

    for (const auto& e : fx.rings) entity_job("ring", e.name, e.issue);
    for (const auto& e : fx.modules) entity_job("module", e.name, e.issue);
    for (const auto& e : fx.homs) entity_job("hom", e.name, e.issue);

    for (const auto& e : fx.presentations) {
        Json j = job_header("presentation", e.name);
        Stopwatch sw;
        if (e.issue) {
            j["status"] = "fail";
            j["issue"] = issue_json(*e.issue);
        } else {
            AxiomReport ax = check_axioms(*e.value, pol);
            j["axioms"] = axiom_report_to_json(ax);
            bool ok = ax.pass();
            if (e.braiding) {
                try {
                    AxiomReport br = check_braiding(*e.value, *e.braiding, pol);
                    j["braiding_check"] = axiom_report_to_json(br);
                    ok = ok && br.pass();
                } catch (const validation_error& err) {
                    j["braiding_check"] = Json{{"error", err.what()}};
                    ok = false;
                }
            }
            j["status"] = ok ? "pass" : "fail";
        }
        j["wall_ms"] = sw.ms();
        report["jobs"].push_back(std::move(j));
    }

    for (const auto& e : fx.functors) {
        Json j = job_header("functor", e.name);
        Stopwatch sw;
        if (e.issue) {
            j["status"] = "fail";
            j["issue"] = issue_json(*e.issue);
        } else {
            AxiomReport rep = check_functor(*e.value, pol);
            j["families"] = axiom_report_to_json(rep);
            j["status"] = rep.pass() ? "pass" : "fail";
        }
        j["wall_ms"] = sw.ms();
        report["jobs"].push_back(std::move(j));
    }

    for (const auto& job : fx.jobs) {
        bool ok = false;
        if (job.run == "validate") {
            continue; // entity validation above is the validate job
        } else if (job.run == "dual") {
            report["jobs"].push_back(run_dual_job(fx, job.functor, caps, pol, ok));
        } else if (job.run == "center") {
            report["jobs"].push_back(run_center_job(fx, job.presentation, caps, pol, ok));
        } else if (job.run == "search") {
            report["jobs"].push_back(run_search_job(fx, job.ring, job.module, caps, pol, ok));
        }
    }

    CommandResult out;
    finish(report, out);
    return out;
}

CommandResult cmd_dual(const std::string& path, const std::string& functor_name, const Caps& caps,
                       const ExecPolicy& pol) {
    Fixture fx = load_fixture(path, caps);
    if (!fx.find_functor(functor_name))
        throw parse_error("unresolved functor \"" + functor_name + "\" in " + path);
    Json report = report_skeleton("dual", path);
    bool ok = false;
    report["jobs"].push_back(run_dual_job(fx, functor_name, caps, pol, ok));
    CommandResult out;
    finish(report, out);
    return out;
}

CommandResult cmd_center(const std::string& path, const std::string& presentation_name,
                         const Caps& caps, const ExecPolicy& pol) {
    Fixture fx = load_fixture(path, caps);
    std::string pname = presentation_name;
    if (pname.empty()) {
        if (fx.presentations.size() != 1)
            throw parse_error("fixture declares " + std::to_string(fx.presentations.size()) +
                              " presentations; pick one with --presentation");
        pname = fx.presentations.front().name;
    }
    if (!fx.find_presentation(pname))
        throw parse_error("unresolved presentation \"" + pname + "\" in " + path);
    Json report = report_skeleton("center", path);
    bool ok = false;
    report["jobs"].push_back(run_center_job(fx, pname, caps, pol, ok));
    CommandResult out;
    finish(report, out);
    return out;
}

CommandResult cmd_search(const std::string& path, const std::string& ring_name,
                         const std::string& module_name, const Caps& caps,
                         const ExecPolicy& pol) {
    Fixture fx = load_fixture(path, caps);
    if (!fx.find_ring(ring_name))
        throw parse_error("unresolved ring \"" + ring_name + "\" in " + path);
    if (!fx.find_module(module_name))
        throw parse_error("unresolved module \"" + module_name + "\" in " + path);
    Json report = report_skeleton("search", path);
    bool ok = false;
    report["jobs"].push_back(run_search_job(fx, ring_name, module_name, caps, pol, ok));
    CommandResult out;
    finish(report, out);
    return out;
}

CommandResult cmd_selftest(const ExecPolicy& pol) {
    SelftestResult res = run_selftest(pol);
    Json report = report_skeleton("selftest", "builtin");
    for (const auto& c : res.criteria) {
        Json j;
        j["job"] = "criterion:" + c.id;
        j["title"] = c.title;
        j["status"] = c.pass ? "pass" : "fail";
        j["detail"] = c.detail;
        j["wall_ms"] = c.wall_ms;
        report["jobs"].push_back(std::move(j));
    }
    CommandResult out;
    finish(report, out);
    return out;
}

} // namespace anncat
