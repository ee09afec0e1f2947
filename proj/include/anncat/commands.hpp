#pragma once

#include <string>

#include "anncat/fixture.hpp"
#include "anncat/parallel.hpp"
#include "anncat/render.hpp"

namespace anncat {

struct CommandResult {
    Json report;
    bool pass = false;
};

// Batch front-end entry points. Shape and reference problems throw
// parse_error (exit 2), cap breaches throw capacity_error (exit 3);
// verification outcomes are carried in the report (exit 1 when !pass).

// Validates every declared entity: construction issues, check_axioms on
// presentations (plus check_braiding where a braiding table is declared),
// check_functor on functors; then runs the fixture's jobs section.
CommandResult cmd_validate(const std::string& path, const Caps& caps = {},
                           const ExecPolicy& pol = {});

CommandResult cmd_dual(const std::string& path, const std::string& functor_name,
                       const Caps& caps = {}, const ExecPolicy& pol = {});

// presentation_name may be empty when the fixture declares exactly one.
CommandResult cmd_center(const std::string& path, const std::string& presentation_name,
                         const Caps& caps = {}, const ExecPolicy& pol = {});

CommandResult cmd_search(const std::string& path, const std::string& ring_name,
                         const std::string& module_name, const Caps& caps = {},
                         const ExecPolicy& pol = {});

CommandResult cmd_selftest(const ExecPolicy& pol = {});

} // namespace anncat
