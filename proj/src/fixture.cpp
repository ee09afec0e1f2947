#include "anncat/fixture.hpp"

#include <fstream>

namespace anncat {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw parse_error(where + ": " + what);
}

const Json& field(const Json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const Json& obj, const std::string& where, const char* key) {
    const Json& v = field(obj, where, key);
    if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
    return v.get<int>();
}

Table table_field(const Json& obj, const std::string& where, const char* key) {
    const Json& v = field(obj, where, key);
    if (!v.is_array()) fail(where + "." + key, "expected an array of arrays");
    Table t;
    for (const auto& row : v) {
        if (!row.is_array()) fail(where + "." + key, "expected an array of arrays");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) fail(where + "." + key, "expected integer entries");
            r.push_back(x.get<int>());
        }
        t.push_back(std::move(r));
    }
    return t;
}

// Flat label table; the single integer 0 is shorthand for all-zero.
std::vector<int> flat_field(const Json& obj, const std::string& where, const char* key,
                            std::size_t len, int zero_index) {
    const Json& v = field(obj, where, key);
    if (v.is_number_integer()) {
        if (v.get<int>() != 0) fail(where + "." + key, "only 0 is a valid table shorthand");
        return std::vector<int>(len, zero_index);
    }
    if (!v.is_array()) fail(where + "." + key, "expected a flat array (or 0)");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) fail(where + "." + key, "expected integer entries");
        out.push_back(x.get<int>());
    }
    if (out.size() != len)
        fail(where + "." + key,
             "expected " + std::to_string(len) + " entries, got " + std::to_string(out.size()));
    return out;
}

std::vector<int> int_array(const Json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array of integers");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) fail(where, "expected integer entries");
        out.push_back(x.get<int>());
    }
    return out;
}

std::string str_field(const Json& obj, const std::string& where, const char* key) {
    const Json& v = field(obj, where, key);
    if (!v.is_string()) fail(where + "." + key, "expected a string");
    return v.get<std::string>();
}

EntityIssue issue_of(const validation_error& e) {
    return EntityIssue{e.check, e.witness, e.what()};
}

Json table_json(const std::vector<int>& flat, int rows, int cols) {
    Json t = Json::array();
    for (int i = 0; i < rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < cols; ++j) row.push_back(flat[static_cast<std::size_t>(i) * cols + j]);
        t.push_back(std::move(row));
    }
    return t;
}

} // namespace

const Entry<FiniteRing>* Fixture::find_ring(const std::string& name) const {
    for (const auto& e : rings)
        if (e.name == name) return &e;
    return nullptr;
}

const Entry<Bimodule>* Fixture::find_module(const std::string& name) const {
    for (const auto& e : modules)
        if (e.name == name) return &e;
    return nullptr;
}

const PresentationEntry* Fixture::find_presentation(const std::string& name) const {
    for (const auto& e : presentations)
        if (e.name == name) return &e;
    return nullptr;
}

const Entry<AnnFunctor>* Fixture::find_functor(const std::string& name) const {
    for (const auto& e : functors)
        if (e.name == name) return &e;
    return nullptr;
}

Fixture parse_fixture(const Json& doc, const Caps& caps) {
    if (!doc.is_object()) throw parse_error("fixture: top level must be a JSON object");
    Fixture fx;

    if (doc.contains("rings")) {
        const Json& rings = doc["rings"];
        if (!rings.is_object()) fail("rings", "expected an object of named rings");
        for (const auto& [name, def] : rings.items()) {
            const std::string where = "rings." + name;
            Entry<FiniteRing> e;
            e.name = name;
            try {
                if (def.contains("zn")) {
                    int n = int_field(def, where, "zn");
                    if (n > caps.max_ring)
                        throw capacity_error(where + ": ring size " + std::to_string(n) +
                                                 " exceeds cap " + std::to_string(caps.max_ring),
                                             n);
                    e.value = make_zn(n);
                } else {
                    Table add = table_field(def, where, "add");
                    if (static_cast<int>(add.size()) > caps.max_ring)
                        throw capacity_error(where + ": ring size " +
                                                 std::to_string(add.size()) + " exceeds cap " +
                                                 std::to_string(caps.max_ring),
                                             static_cast<double>(add.size()));
                    e.value = make_table_ring(add, table_field(def, where, "mul"),
                                              int_field(def, where, "zero"),
                                              int_field(def, where, "one"));
                }
            } catch (const validation_error& err) {
                e.issue = issue_of(err);
            }
            fx.rings.push_back(std::move(e));
        }
    }

    if (doc.contains("modules")) {
        const Json& modules = doc["modules"];
        if (!modules.is_object()) fail("modules", "expected an object of named modules");
        for (const auto& [name, def] : modules.items()) {
            const std::string where = "modules." + name;
            Entry<Bimodule> e;
            e.name = name;
            std::string rname = str_field(def, where, "ring");
            const Entry<FiniteRing>* re = fx.find_ring(rname);
            if (!re) fail(where + ".ring", "unresolved ring \"" + rname + "\"");
            if (!re->ok()) {
                e.issue = EntityIssue{"dependency-invalid", {},
                                      where + ": ring \"" + rname + "\" failed validation"};
            } else {
                try {
                    if (def.contains("regular") && def["regular"].get<bool>()) {
                        e.value = regular_bimodule(*re->value);
                    } else {
                        Table add = table_field(def, where, "add");
                        if (static_cast<int>(add.size()) > caps.max_module)
                            throw capacity_error(where + ": module size " +
                                                     std::to_string(add.size()) +
                                                     " exceeds cap " +
                                                     std::to_string(caps.max_module),
                                                 static_cast<double>(add.size()));
                        e.value = make_bimodule(*re->value, add, int_field(def, where, "zero"),
                                                table_field(def, where, "lact"),
                                                table_field(def, where, "ract"));
                    }
                } catch (const validation_error& err) {
                    e.issue = issue_of(err);
                }
            }
            fx.modules.push_back(std::move(e));
        }
    }

    if (doc.contains("homs")) {
        const Json& homs = doc["homs"];
        if (!homs.is_object()) fail("homs", "expected an object of named homs");
        for (const auto& [name, def] : homs.items()) {
            const std::string where = "homs." + name;
            HomEntry e;
            e.name = name;
            e.kind = str_field(def, where, "kind");
            std::string src = str_field(def, where, "src");
            std::string dst = str_field(def, where, "dst");
            std::vector<int> map = int_array(field(def, where, "map"), where + ".map");
            if (e.kind == "ring") {
                const Entry<FiniteRing>* s = fx.find_ring(src);
                const Entry<FiniteRing>* d = fx.find_ring(dst);
                if (!s) fail(where + ".src", "unresolved ring \"" + src + "\"");
                if (!d) fail(where + ".dst", "unresolved ring \"" + dst + "\"");
                if (!s->ok() || !d->ok()) {
                    e.issue = EntityIssue{"dependency-invalid", {},
                                          where + ": endpoint ring failed validation"};
                } else {
                    try {
                        e.ring = make_ring_hom(*s->value, *d->value, std::move(map));
                    } catch (const validation_error& err) {
                        e.issue = issue_of(err);
                    }
                }
            } else if (e.kind == "group") {
                const Entry<Bimodule>* s = fx.find_module(src);
                const Entry<Bimodule>* d = fx.find_module(dst);
                if (!s) fail(where + ".src", "unresolved module \"" + src + "\"");
                if (!d) fail(where + ".dst", "unresolved module \"" + dst + "\"");
                if (!s->ok() || !d->ok()) {
                    e.issue = EntityIssue{"dependency-invalid", {},
                                          where + ": endpoint module failed validation"};
                } else {
                    try {
                        e.group = make_group_hom(s->value->grp, d->value->grp, std::move(map));
                    } catch (const validation_error& err) {
                        e.issue = issue_of(err);
                    }
                }
            } else {
                fail(where + ".kind", "expected \"ring\" or \"group\"");
            }
            fx.homs.push_back(std::move(e));
        }
    }

    if (doc.contains("presentations")) {
        const Json& pres = doc["presentations"];
        if (!pres.is_object()) fail("presentations", "expected an object of named presentations");
        for (const auto& [name, def] : pres.items()) {
            const std::string where = "presentations." + name;
            PresentationEntry e;
            e.name = name;
            std::string rname = str_field(def, where, "ring");
            std::string mname = str_field(def, where, "module");
            const Entry<FiniteRing>* re = fx.find_ring(rname);
            const Entry<Bimodule>* me = fx.find_module(mname);
            if (!re) fail(where + ".ring", "unresolved ring \"" + rname + "\"");
            if (!me) fail(where + ".module", "unresolved module \"" + mname + "\"");
            if (!re->ok() || !me->ok()) {
                e.issue = EntityIssue{"dependency-invalid", {},
                                      where + ": ring or module failed validation"};
            } else {
                const int n = re->value->n;
                const int zero = me->value->grp.zero;
                try {
                    std::vector<int> lam =
                        flat_field(def, where, "lambda",
                                   static_cast<std::size_t>(n) * n * n, zero);
                    std::vector<int> eta =
                        flat_field(def, where, "eta", static_cast<std::size_t>(n) * n, zero);
                    e.value = from_rm(*re->value, *me->value, std::move(lam), std::move(eta));
                    if (def.contains("braiding"))
                        e.braiding = flat_field(def, where, "braiding",
                                                static_cast<std::size_t>(n) * n, zero);
                } catch (const validation_error& err) {
                    e.issue = issue_of(err);
                }
            }
            fx.presentations.push_back(std::move(e));
        }
    }

    if (doc.contains("functors")) {
        const Json& functors = doc["functors"];
        if (!functors.is_object()) fail("functors", "expected an object of named functors");
        for (const auto& [name, def] : functors.items()) {
            const std::string where = "functors." + name;
            Entry<AnnFunctor> e;
            e.name = name;
            std::string sname = str_field(def, where, "src");
            std::string dname = str_field(def, where, "dst");
            const PresentationEntry* s = fx.find_presentation(sname);
            const PresentationEntry* d = fx.find_presentation(dname);
            if (!s) fail(where + ".src", "unresolved presentation \"" + sname + "\"");
            if (!d) fail(where + ".dst", "unresolved presentation \"" + dname + "\"");
            if (!s->ok() || !d->ok()) {
                e.issue = EntityIssue{"dependency-invalid", {},
                                      where + ": endpoint presentation failed validation"};
            } else {
                const int n = s->value->objs.n;
                try {
                    std::vector<int> omap =
                        int_array(field(def, where, "omap"), where + ".omap");
                    std::vector<int> lmap =
                        int_array(field(def, where, "lmap"), where + ".lmap");
                    std::vector<int> mu = flat_field(def, where, "mu",
                                                     static_cast<std::size_t>(n) * n,
                                                     d->value->labels.zero);
                    std::vector<int> nu = flat_field(def, where, "nu",
                                                     static_cast<std::size_t>(n) * n,
                                                     d->value->labels.zero);
                    RingHom p = make_ring_hom(s->value->objs, d->value->objs, std::move(omap));
                    GroupHom q =
                        make_group_hom(s->value->labels, d->value->labels, std::move(lmap));
                    e.value = make_pq_functor(*s->value, *d->value, p, q, std::move(mu),
                                              std::move(nu));
                } catch (const validation_error& err) {
                    e.issue = issue_of(err);
                }
            }
            fx.functors.push_back(std::move(e));
        }
    }

    if (doc.contains("jobs")) {
        const Json& jobs = doc["jobs"];
        if (!jobs.is_array()) fail("jobs", "expected an array");
        int idx = 0;
        for (const auto& j : jobs) {
            const std::string where = "jobs[" + std::to_string(idx++) + "]";
            Job job;
            job.run = str_field(j, where, "run");
            if (job.run == "validate") {
                // no arguments
            } else if (job.run == "dual") {
                job.functor = str_field(j, where, "functor");
                if (!fx.find_functor(job.functor))
                    fail(where + ".functor", "unresolved functor \"" + job.functor + "\"");
            } else if (job.run == "center") {
                job.presentation = str_field(j, where, "presentation");
                if (!fx.find_presentation(job.presentation))
                    fail(where + ".presentation",
                         "unresolved presentation \"" + job.presentation + "\"");
            } else if (job.run == "search") {
                job.ring = str_field(j, where, "ring");
                job.module = str_field(j, where, "module");
                if (!fx.find_ring(job.ring))
                    fail(where + ".ring", "unresolved ring \"" + job.ring + "\"");
                if (!fx.find_module(job.module))
                    fail(where + ".module", "unresolved module \"" + job.module + "\"");
            } else {
                fail(where + ".run", "unknown job kind \"" + job.run + "\"");
            }
            fx.jobs.push_back(std::move(job));
        }
    }

    return fx;
}

Fixture load_fixture(const std::string& path, const Caps& caps) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open fixture file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw parse_error("fixture JSON parse error in " + path + ": " + e.what());
    }
    return parse_fixture(doc, caps);
}

Json ring_to_json(const FiniteRing& r) {
    Json j;
    j["size"] = r.n;
    j["zero"] = r.zero;
    j["one"] = r.one;
    j["add"] = table_json(r.add, r.n, r.n);
    j["mul"] = table_json(r.mul, r.n, r.n);
    return j;
}

Json module_to_json(const Bimodule& m) {
    Json j;
    j["size"] = m.grp.n;
    j["zero"] = m.grp.zero;
    j["add"] = table_json(m.grp.add, m.grp.n, m.grp.n);
    j["lact"] = table_json(m.lact, m.base.n, m.grp.n);
    j["ract"] = table_json(m.ract, m.base.n, m.grp.n);
    return j;
}

Json presentation_to_json(const AnnPresentation& p) {
    Json j;
    j["objects"] = p.objs.n;
    j["labels"] = p.labels.n;
    j["zero"] = p.objs.zero;
    j["one"] = p.objs.one;
    j["oplus"] = table_json(p.objs.add, p.objs.n, p.objs.n);
    j["otimes"] = table_json(p.objs.mul, p.objs.n, p.objs.n);
    j["lambda"] = p.lambda;
    j["eta"] = p.eta;
    return j;
}

Json dual_to_json(const DualCategory& d) {
    Json j;
    j["objects"] = Json::array();
    for (const auto& o : d.objects) {
        Json jo;
        jo["r"] = o.r;
        jo["u"] = o.u;
        j["objects"].push_back(std::move(jo));
    }
    j["labels"] = d.label_elems;
    j["presentation"] = presentation_to_json(d.pres);
    return j;
}

} // namespace anncat
