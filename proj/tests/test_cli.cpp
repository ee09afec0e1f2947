// Drives the installed CLI binary end to end: exit codes, report files,
// determinism across worker counts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "anncat/render.hpp"

namespace {

std::string fixture(const std::string& name) {
    return std::string(ANNCAT_FIXTURES) + "/" + name;
}

int run(const std::string& args) {
    std::string cmd = std::string(ANNCAT_BIN) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

anncat::Json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return anncat::Json::parse(in);
}

} // namespace

TEST_CASE("exit code 0: all-pass validation, dual, center, search") {
    CHECK(run("validate " + fixture("strict_z2.json")) == 0);
    CHECK(run("validate " + fixture("z4_mod2.json")) == 0);
    CHECK(run("validate " + fixture("reduction.json")) == 0);
    CHECK(run("validate " + fixture("t2_probe.json")) == 0);
    CHECK(run("dual " + fixture("reduction.json") + " --functor F") == 0);
    CHECK(run("center " + fixture("strict_z2.json")) == 0);
    CHECK(run("center " + fixture("strict_z3.json") + " --presentation P") == 0);
    CHECK(run("validate " + fixture("z4_mod2_twisted.json")) == 0);
    CHECK(run("search " + fixture("search_z2.json") + " --ring Z2 --module M2") == 0);
    CHECK(run("selftest") == 0);
}

TEST_CASE("exit code 1: verification failures") {
    CHECK(run("validate " + fixture("lambda_xyz.json")) == 1);
    CHECK(run("validate " + fixture("bad_ring.json")) == 1);
    CHECK(run("center " + fixture("lambda_xyz.json")) == 1);
}

TEST_CASE("exit code 2: usage and parse errors") {
    CHECK(run("validate " + fixture("bad_parse.json")) == 2);
    CHECK(run("validate " + fixture("no_such_file.json")) == 2);
    CHECK(run("dual " + fixture("reduction.json") + " --functor nope") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("dual " + fixture("reduction.json")) == 2); // --functor is required
}

TEST_CASE("exit code 3: resource refusals") {
    CHECK(run("search " + fixture("search_z2.json") +
              " --ring Z2 --module M2 --max-candidates 10") == 3);
    CHECK(run("validate " + fixture("strict_z2.json") + " --max-ring 1") == 3);
}

TEST_CASE("unwritable report path is an I/O error") {
    CHECK(run("validate " + fixture("strict_z2.json") + " --out /nonexistent/dir/report.json") ==
          1);
}

TEST_CASE("--out writes a machine-readable report, stable across runs and workers") {
    std::string out1 = std::string(ANNCAT_FIXTURES) + "/../build/report1.json";
    std::string out2 = std::string(ANNCAT_FIXTURES) + "/../build/report2.json";
    CHECK(run("search " + fixture("search_z2.json") + " --ring Z2 --module M2 --workers 1 --out " +
              out1) == 0);
    CHECK(run("search " + fixture("search_z2.json") + " --ring Z2 --module M2 --workers 4 --out " +
              out2) == 0);
    anncat::Json a = anncat::strip_timing(load_json(out1));
    anncat::Json b = anncat::strip_timing(load_json(out2));
    CHECK(a.dump() == b.dump());
    CHECK(a["jobs"][0]["candidates"] == 4096);
}
