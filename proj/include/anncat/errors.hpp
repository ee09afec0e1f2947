#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace anncat {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural axiom failed during construction of a ring, module, hom,
// presentation or functor. `check` names the violated law, `witness` is the
// tuple at which it fails; re-evaluating the law at `witness` must reproduce
// the violation.
struct validation_error : error {
    std::string check;
    std::vector<int> witness;

    validation_error(std::string check_, std::vector<int> witness_, const std::string& msg)
        : error(msg), check(std::move(check_)), witness(std::move(witness_)) {}
};

// Malformed fixture input (bad JSON, missing field, unresolved reference).
struct parse_error : error {
    using error::error;
};

// A search or enumeration would exceed a configured cap. Carries the size
// estimate that triggered the refusal.
struct capacity_error : error {
    double estimate;

    capacity_error(const std::string& msg, double estimate_)
        : error(msg), estimate(estimate_) {}
};

// A construction produced data contradicting what the theory guarantees
// (e.g. the sum of two dual objects is not itself a dual object). Signals
// either a fixture outside the construction's hypotheses or a bug.
struct inconsistency_error : error {
    using error::error;
};

} // namespace anncat
