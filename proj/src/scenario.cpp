#include "trisect/scenario.hpp"

#include <fstream>
#include <sstream>

#include "trisect/errors.hpp"

namespace trisect {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw SchemaError(msg); }

const json& need(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) bad(where + ": missing '" + key + "'");
    return obj.at(key);
}

int get_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) bad(where + ": expected an integer");
    return v.get<int>();
}

std::string get_str(const json& v, const std::string& where) {
    if (!v.is_string()) bad(where + ": expected a string");
    return v.get<std::string>();
}

std::set<std::string> get_str_set(const json& v, const std::string& where) {
    if (!v.is_array()) bad(where + ": expected an array of strings");
    std::set<std::string> out;
    for (const auto& x : v) out.insert(get_str(x, where));
    return out;
}

FormalDivisor get_divisor(const json& v, const EquivalenceLedger& ledger, const std::string& where) {
    if (!v.is_object()) bad(where + ": expected a {symbol: coefficient} object");
    FormalDivisor d;
    for (const auto& [sym, c] : v.items()) {
        if (!ledger.declared(sym)) bad(where + ": undeclared symbol '" + sym + "'");
        d.add(sym, get_int(c, where + "." + sym));
    }
    return d;
}

RuledSurfaceModel parse_surface(const json& s, bool raw) {
    const std::string w = "surface";
    RuledSurfaceModel m;
    m.g_y = get_int(need(s, "g_y", w), w + ".g_y");
    if (m.g_y < 0) bad("surface.g_y must be non-negative");
    const bool has_gx = s.contains("g_x");
    const bool has_b = s.contains("b");
    if (!has_gx && !has_b) bad("surface: give g_x or b");
    if (has_gx) m.g_x = get_int(s.at("g_x"), "surface.g_x");
    m.b = has_b ? get_int(s.at("b"), "surface.b") : m.g_x - 3 * m.g_y + 2;
    if (!has_gx) m.g_x = m.b + 3 * m.g_y - 2;

    if (s.contains("e")) {
        m.e = get_int(s.at("e"), "surface.e");
        if ((m.e - m.b) % 2 != 0) bad("surface: e and b differ in parity");
        m.n = (m.e + m.b) / 2;
        if (s.contains("n") && get_int(s.at("n"), "surface.n") != m.n) bad("surface: n disagrees with e");
    } else if (s.contains("n")) {
        m.n = get_int(s.at("n"), "surface.n");
        m.e = 2 * m.n - m.b;
    } else {
        bad("surface: give e or n");
    }
    if (s.contains("splitting") && !s.at("splitting").is_null()) {
        const auto& sp = s.at("splitting");
        if (!sp.is_array() || sp.size() != 2) bad("surface.splitting must be [b1, b2]");
        m.splitting = Splitting{get_int(sp[0], "surface.splitting"), get_int(sp[1], "surface.splitting")};
        m.decomposability = Decomposability::Decomposable;
    }
    if (s.contains("decomposable") && !s.at("decomposable").is_null()) {
        if (!s.at("decomposable").is_boolean()) bad("surface.decomposable must be a boolean");
        m.decomposability = s.at("decomposable").get<bool>() ? Decomposability::Decomposable
                                                             : Decomposability::Indecomposable;
    }
    m.raw = raw;
    const auto v = m.invariant_violations();
    if (!v.empty()) bad("surface invariants: " + v.front());
    return m;
}

ElmStep parse_step(const json& j, std::size_t i) {
    const std::string w = "script[" + std::to_string(i) + "]";
    ElmStep s;
    s.center = get_str(need(j, "center", w), w + ".center");
    s.fiber = get_str(need(j, "fiber", w), w + ".fiber");
    if (j.contains("on_min_section")) {
        if (!j.at("on_min_section").is_boolean()) bad(w + ".on_min_section must be a boolean");
        s.on_min_section = j.at("on_min_section").get<bool>();
    }
    if (j.contains("on_sections")) s.on_sections = get_str_set(j.at("on_sections"), w + ".on_sections");
    if (j.contains("multiplicity")) s.trisection_multiplicity = get_int(j.at("multiplicity"), w + ".multiplicity");
    return s;
}

void check_class(const SurfaceClass& c, const EquivalenceLedger& L, const std::string& where) {
    if (c.fib_formal && degree(*c.fib_formal, L) != c.fib_deg) {
        bad(where + ": formal fiber part has degree " + std::to_string(degree(*c.fib_formal, L)) +
            ", fib_deg is " + std::to_string(c.fib_deg));
    }
}

}  // namespace

Scenario parse_scenario(const json& doc) {
    if (!doc.is_object()) bad("scenario must be a JSON object");
    const int version = get_int(need(doc, "schema_version", "scenario"), "schema_version");
    if (version != kScenarioSchemaVersion) bad("unsupported schema_version " + std::to_string(version));

    Scenario sc;
    if (doc.contains("name")) sc.name = get_str(doc.at("name"), "name");
    bool raw = false;
    if (doc.contains("raw_surface")) {
        if (!doc.at("raw_surface").is_boolean()) bad("raw_surface must be a boolean");
        raw = doc.at("raw_surface").get<bool>();
    }
    ElmState& st = sc.initial;
    st.surface = parse_surface(need(doc, "surface", "scenario"), raw);

    auto& L = st.ledger;
    try {
        if (doc.contains("symbols")) {
            if (!doc.at("symbols").is_object()) bad("symbols must be an object");
            for (const auto& [sym, deg] : doc.at("symbols").items()) L.declare(sym, get_int(deg, "symbols." + sym));
        }
        if (doc.contains("points")) {
            if (!doc.at("points").is_object()) bad("points must be an object");
            for (const auto& [pt, fib] : doc.at("points").items()) {
                const std::string f = get_str(fib, "points." + pt);
                L.declare(f, 1);
                st.point_fibers[pt] = f;
            }
        }
        if (doc.contains("relations")) {
            if (!doc.at("relations").is_array()) bad("relations must be an array");
            for (const auto& r : doc.at("relations")) {
                if (r.contains("lhs") || r.contains("rhs")) {
                    L.relate(get_divisor(need(r, "lhs", "relation"), L, "relation.lhs"),
                             get_divisor(need(r, "rhs", "relation"), L, "relation.rhs"));
                } else {
                    L.relate(get_divisor(r, L, "relation"));
                }
            }
        }
    } catch (const InvalidRelation& ex) {
        bad(ex.what());
    }

    const auto known_point = [&](const std::string& p, const std::string& where) {
        if (!st.point_fibers.count(p)) bad(where + ": point '" + p + "' has no fiber in 'points'");
    };

    if (doc.contains("sections")) {
        if (!doc.at("sections").is_array()) bad("sections must be an array");
        for (const auto& j : doc.at("sections")) {
            TrackedSection sec;
            sec.id = get_str(need(j, "id", "section"), "section.id");
            if (st.section(sec.id)) bad("duplicate section id '" + sec.id + "'");
            const std::string w = "section " + sec.id;
            sec.cls.sigma = 1;
            sec.cls.fib_deg = get_int(need(j, "fib_deg", w), w + ".fib_deg");
            if (j.contains("formal")) sec.cls.fib_formal = get_divisor(j.at("formal"), L, w + ".formal");
            check_class(sec.cls, L, w);
            if (j.contains("marked")) sec.marked_points = get_str_set(j.at("marked"), w + ".marked");
            std::set<std::string> fibers;
            for (const auto& p : sec.marked_points) {
                known_point(p, w);
                if (!fibers.insert(st.point_fibers.at(p)).second) bad(w + ": two marked points on one fiber");
            }
            st.sections.push_back(std::move(sec));
        }
    }

    if (doc.contains("formal_splitting")) {
        const auto& f = doc.at("formal_splitting");
        FormalSplitting fs;
        fs.low = get_divisor(need(f, "low", "formal_splitting"), L, "formal_splitting.low");
        fs.high = get_divisor(need(f, "high", "formal_splitting"), L, "formal_splitting.high");
        if (f.contains("low_section")) fs.low_section = get_str(f.at("low_section"), "formal_splitting.low_section");
        if (f.contains("high_section")) fs.high_section = get_str(f.at("high_section"), "formal_splitting.high_section");
        for (const auto* id : {&fs.low_section, &fs.high_section})
            if (!id->empty() && !st.section(*id)) bad("formal_splitting names unknown section '" + *id + "'");
        if (!st.surface.splitting) bad("formal_splitting needs surface.splitting");
        if (degree(fs.low, L) != st.surface.splitting->b1 || degree(fs.high, L) != st.surface.splitting->b2) {
            bad("formal_splitting degrees disagree with surface.splitting");
        }
        st.formal_splitting = fs;
    }

    if (doc.contains("trisection") && !doc.at("trisection").is_null()) {
        const auto& j = doc.at("trisection");
        TrackedTrisection t;
        t.cls.sigma = 3;
        t.cls.fib_deg = j.contains("fib_deg") ? get_int(j.at("fib_deg"), "trisection.fib_deg")
                                              : 3 * st.surface.n - st.surface.b;
        if (j.contains("formal")) t.cls.fib_formal = get_divisor(j.at("formal"), L, "trisection.formal");
        check_class(t.cls, L, "trisection");
        if (j.contains("smooth_points")) t.smooth_points = get_str_set(j.at("smooth_points"), "trisection.smooth_points");
        for (const auto& p : t.smooth_points) known_point(p, "trisection.smooth_points");
        if (j.contains("singularities")) {
            for (const auto& sj : j.at("singularities")) {
                SingularityProfile p;
                p.point = get_str(need(sj, "point", "singularity"), "singularity.point");
                const std::string w = "singularity " + p.point;
                if (sj.contains("fiber")) {
                    p.fiber = get_str(sj.at("fiber"), w + ".fiber");
                    L.declare(p.fiber, 1);
                    if (st.point_fibers.count(p.point) && st.point_fibers.at(p.point) != p.fiber) {
                        bad(w + ": fiber disagrees with 'points'");
                    }
                    st.point_fibers[p.point] = p.fiber;
                } else {
                    known_point(p.point, w);
                    p.fiber = st.point_fibers.at(p.point);
                }
                const auto& ch = need(sj, "chain", w);
                if (!ch.is_array() || ch.empty()) bad(w + ".chain must be a non-empty array");
                for (const auto& r : ch) {
                    const int v = get_int(r, w + ".chain");
                    if (v != 2 && v != 3) bad(w + ".chain entries must be 2 or 3");
                    p.chain.push_back(v);
                }
                if (sj.contains("through")) {
                    for (const auto& level : sj.at("through")) p.through.push_back(get_str_set(level, w + ".through"));
                    if (p.through.size() > p.chain.size()) bad(w + ".through longer than chain");
                    for (const auto& level : p.through)
                        for (const auto& id : level)
                            if (!st.section(id)) bad(w + ".through names unknown section '" + id + "'");
                }
                if (t.profile_at(p.point) || t.smooth_points.count(p.point)) bad(w + ": point declared twice");
                t.singularities.push_back(std::move(p));
            }
        }
        std::map<std::string, int> load;
        for (const auto& p : t.smooth_points) load[st.point_fibers.at(p)] += 1;
        for (const auto& p : t.singularities) load[p.fiber] += p.multiplicity();
        for (const auto& [f, l] : load)
            if (l > 3) bad("trisection meets fiber " + f + " with total multiplicity " + std::to_string(l));
        st.trisection = std::move(t);
    }

    if (doc.contains("script")) {
        if (!doc.at("script").is_array()) bad("script must be an array");
        for (std::size_t i = 0; i < doc.at("script").size(); ++i) sc.script.push_back(parse_step(doc.at("script")[i], i));
    }
    if (doc.contains("checks")) {
        if (!doc.at("checks").is_object()) bad("checks must be an object");
        sc.checks = doc.at("checks");
    }
    return sc;
}

Scenario parse_scenario_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        bad(std::string("malformed JSON: ") + ex.what());
    }
    return parse_scenario(doc);
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open scenario file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario_text(ss.str());
}

json to_json(const FormalDivisor& d) {
    json j = json::object();
    for (const auto& [s, c] : d.terms()) j[s] = c;
    return j;
}

json to_json(const SurfaceClass& c) {
    json j{{"sigma", c.sigma}, {"fib_deg", c.fib_deg}};
    if (c.fib_formal) j["formal"] = c.fib_formal->to_string();
    return j;
}

json to_json(const RuledSurfaceModel& m) {
    json j{{"g_y", m.g_y}, {"g_x", m.g_x}, {"b", m.b}, {"n", m.n}, {"e", m.e},
           {"decomposability", to_string(m.decomposability)}, {"raw", m.raw}};
    j["splitting"] = m.splitting ? json::array({m.splitting->b1, m.splitting->b2}) : json(nullptr);
    return j;
}

json to_json(const SingularityProfile& p) {
    return json{{"point", p.point}, {"fiber", p.fiber}, {"chain", p.chain}, {"delta", p.delta()}};
}

json to_json(const ElmStep& s) {
    return json{{"center", s.center},
                {"fiber", s.fiber},
                {"on_min_section", s.on_min_section},
                {"on_sections", s.on_sections},
                {"multiplicity", s.trisection_multiplicity}};
}

json to_json(const ElmState& s) {
    json j;
    j["surface"] = to_json(s.surface);
    j["sections"] = json::array();
    for (const auto& sec : s.sections) {
        json x = to_json(sec.cls);
        x["id"] = sec.id;
        x["marked"] = sec.marked_points;
        j["sections"].push_back(x);
    }
    if (s.trisection) {
        json t;
        t["class"] = to_json(s.trisection->cls);
        t["delta_total"] = s.trisection->delta_total();
        t["smooth_points"] = s.trisection->smooth_points;
        t["singularities"] = json::array();
        for (const auto& p : s.trisection->singularities) t["singularities"].push_back(to_json(p));
        j["trisection"] = t;
    }
    if (s.formal_splitting) {
        j["formal_splitting"] = {{"low", s.formal_splitting->low.to_string()},
                                 {"high", s.formal_splitting->high.to_string()}};
    }
    j["steps_taken"] = s.history.size();
    return j;
}

}  // namespace trisect
