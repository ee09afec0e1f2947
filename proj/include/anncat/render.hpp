#pragma once

#include <string>

#include "anncat/fixture.hpp"
#include "anncat/report.hpp"

namespace anncat {

Json family_to_json(const FamilyResult& f);
Json axiom_report_to_json(const AxiomReport& r);

// Plain-text rendering of a report document: a deterministic walk printing
// every key and value, so text and JSON carry identical data.
std::string render_text(const Json& j);

// Copy with every "wall_ms" entry removed; reports are byte-identical across
// runs after this.
Json strip_timing(const Json& j);

} // namespace anncat
