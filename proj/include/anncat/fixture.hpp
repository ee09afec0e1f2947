#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "anncat/dual.hpp"
#include "anncat/finite_algebra.hpp"
#include "anncat/functor.hpp"
#include "anncat/presentation.hpp"
#include "anncat/search.hpp"

namespace anncat {

using Json = nlohmann::ordered_json;

struct Caps {
    int max_ring = 32;
    int max_module = 32;
    DualSearchCaps dual;
    SearchCaps search;
};

// An algebraic law violated while constructing a declared entity. Kept as
// report data, unlike shape/reference problems which abort the parse.
struct EntityIssue {
    std::string check;
    std::vector<int> witness;
    std::string message;
};

template <class T>
struct Entry {
    std::string name;
    std::optional<T> value;
    std::optional<EntityIssue> issue;

    bool ok() const { return value.has_value(); }
};

struct PresentationEntry {
    std::string name;
    std::optional<AnnPresentation> value;
    std::optional<std::vector<int>> braiding;
    std::optional<EntityIssue> issue;

    bool ok() const { return value.has_value(); }
};

struct HomEntry {
    std::string name;
    std::string kind; // "ring" | "group"
    std::optional<RingHom> ring;
    std::optional<GroupHom> group;
    std::optional<EntityIssue> issue;

    bool ok() const { return ring.has_value() || group.has_value(); }
};

struct Job {
    std::string run; // validate | dual | center | search
    std::string functor;
    std::string presentation;
    std::string ring;
    std::string module;
};

struct Fixture {
    std::vector<Entry<FiniteRing>> rings;
    std::vector<Entry<Bimodule>> modules;
    std::vector<HomEntry> homs;
    std::vector<PresentationEntry> presentations;
    std::vector<Entry<AnnFunctor>> functors;
    std::vector<Job> jobs;

    const Entry<FiniteRing>* find_ring(const std::string& name) const;
    const Entry<Bimodule>* find_module(const std::string& name) const;
    const PresentationEntry* find_presentation(const std::string& name) const;
    const Entry<AnnFunctor>* find_functor(const std::string& name) const;
};

// Throws parse_error for malformed JSON, bad shapes and unresolved
// references; capacity_error for size-cap breaches. Algebraic validation
// failures land in the entries' `issue` fields.
Fixture parse_fixture(const Json& doc, const Caps& caps);
Fixture load_fixture(const std::string& path, const Caps& caps);

// Entity serialization (used by reports and round-trip tests).
Json ring_to_json(const FiniteRing& r);
Json module_to_json(const Bimodule& m);
Json presentation_to_json(const AnnPresentation& p);
Json dual_to_json(const DualCategory& d);

} // namespace anncat
