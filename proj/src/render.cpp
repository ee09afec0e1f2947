#include "anncat/render.hpp"

namespace anncat {

Json family_to_json(const FamilyResult& f) {
    Json j;
    j["name"] = f.name;
    j["group"] = f.group;
    j["tuples"] = f.tuples;
    j["failures"] = f.failures;
    j["pass"] = f.pass();
    if (!f.pass()) {
        j["witness"] = f.witness;
        j["lhs"] = f.lhs;
        j["rhs"] = f.rhs;
    }
    return j;
}

Json axiom_report_to_json(const AxiomReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["failures"] = r.total_failures();
    if (!r.eta_diagonal.empty()) j["eta_diagonal"] = r.eta_diagonal;
    j["families"] = Json::array();
    for (const auto& f : r.families) j["families"].push_back(family_to_json(f));
    return j;
}

namespace {

bool scalar_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& v : j)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

void render(const Json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !scalar_array(v))) {
                out += pad + k + ":\n";
                render(v, out, depth + 1);
            } else {
                out += pad + k + ": " + v.dump() + "\n";
            }
        }
    } else if (j.is_array()) {
        int idx = 0;
        for (const auto& v : j) {
            if (v.is_object() || (v.is_array() && !scalar_array(v))) {
                out += pad + "- [" + std::to_string(idx) + "]\n";
                render(v, out, depth + 1);
            } else {
                out += pad + "- " + v.dump() + "\n";
            }
            ++idx;
        }
    } else {
        out += pad + j.dump() + "\n";
    }
}

} // namespace

std::string render_text(const Json& j) {
    std::string out;
    render(j, out, 0);
    return out;
}

Json strip_timing(const Json& j) {
    if (j.is_object()) {
        Json out = Json::object();
        for (const auto& [k, v] : j.items()) {
            if (k == "wall_ms") continue;
            out[k] = strip_timing(v);
        }
        return out;
    }
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& v : j) out.push_back(strip_timing(v));
        return out;
    }
    return j;
}

} // namespace anncat
