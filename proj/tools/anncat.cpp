// anncat — batch front-end: load fixtures, run constructions and
// certification suites, emit text and JSON reports.
//
// Exit codes: 0 all-pass, 1 verification failure, 2 usage/parse error,
// 3 resource refusal.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "anncat/commands.hpp"

namespace {

struct CommonOpts {
    std::string out;
    int max_ring = 32;
    int max_module = 32;
    int max_udims = 6;
    std::uint64_t max_candidates = std::uint64_t{1} << 20;
    int workers = 0;
    bool serial = false;

    anncat::Caps caps() const {
        anncat::Caps c;
        c.max_ring = max_ring;
        c.max_module = max_module;
        c.dual.max_free_dims = max_udims;
        c.dual.max_candidates = max_candidates;
        c.search.max_candidates = max_candidates;
        return c;
    }

    anncat::ExecPolicy policy() const {
        anncat::ExecPolicy p;
        p.mode = serial ? anncat::ExecMode::serial : anncat::ExecMode::parallel;
        p.workers = workers;
        return p;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out, "write the JSON report to this file");
    cmd->add_option("--max-ring", o.max_ring, "largest accepted ring size");
    cmd->add_option("--max-module", o.max_module, "largest accepted module size");
    cmd->add_option("--max-udims", o.max_udims, "free dimensions cap for the u-table search");
    cmd->add_option("--max-candidates", o.max_candidates,
                    "candidate cap for exhaustive searches");
    cmd->add_option("--workers", o.workers, "worker threads (0 = runtime default)");
    cmd->add_flag("--serial", o.serial, "disable parallel kernels");
}

int emit(const anncat::CommandResult& res, const CommonOpts& o) {
    std::cout << anncat::render_text(res.report);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "anncat: cannot write report to " << o.out << "\n";
            return 1;
        }
        f << res.report.dump(2) << "\n";
    }
    return res.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"anncat: construct and certify skeletal categorical rings, their duals and "
                 "centers over finite rings and bimodules"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string file, functor, presentation, ring, module;

    CLI::App* validate = app.add_subcommand("validate", "validate every entity in a fixture");
    validate->add_option("file", file, "fixture JSON")->required();
    add_common(validate, o);

    CLI::App* dual = app.add_subcommand("dual", "build and certify the dual over a functor");
    dual->add_option("file", file, "fixture JSON")->required();
    dual->add_option("--functor", functor, "functor name")->required();
    add_common(dual, o);

    CLI::App* centerc = app.add_subcommand("center", "build and certify a center with braiding");
    centerc->add_option("file", file, "fixture JSON")->required();
    centerc->add_option("--presentation", presentation,
                        "presentation name (optional when unique)");
    add_common(centerc, o);

    CLI::App* search = app.add_subcommand("search", "enumerate all (lambda, eta) tables");
    search->add_option("file", file, "fixture JSON")->required();
    search->add_option("--ring", ring, "ring name")->required();
    search->add_option("--module", module, "module name")->required();
    add_common(search, o);

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in acceptance battery");
    add_common(selftest, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        anncat::CommandResult res;
        if (validate->parsed())
            res = anncat::cmd_validate(file, o.caps(), o.policy());
        else if (dual->parsed())
            res = anncat::cmd_dual(file, functor, o.caps(), o.policy());
        else if (centerc->parsed())
            res = anncat::cmd_center(file, presentation, o.caps(), o.policy());
        else if (search->parsed())
            res = anncat::cmd_search(file, ring, module, o.caps(), o.policy());
        else
            res = anncat::cmd_selftest(o.policy());
        return emit(res, o);
    } catch (const anncat::parse_error& e) {
        std::cerr << "anncat: " << e.what() << "\n";
        return 2;
    } catch (const anncat::capacity_error& e) {
        std::cerr << "anncat: refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "anncat: " << e.what() << "\n";
        return 1;
    }
}
