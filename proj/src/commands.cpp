#include "trisect/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "trisect/errors.hpp"
#include "trisect/report.hpp"
#include "trisect/scenario.hpp"
#include "trisect/theorems.hpp"
#include "trisect/verify.hpp"

namespace trisect {

namespace {

using nlohmann::json;

std::string str(int v) { return std::to_string(v); }

int finish(const Report& rep, const std::string& json_out, std::ostream& out, std::ostream& err) {
    rep.print(out);
    if (!json_out.empty()) {
        try {
            rep.write_json(json_out);
        } catch (const std::exception& ex) {
            err << "error: " << ex.what() << "\n";
            return kExitInputError;
        }
    }
    return rep.exit_code();
}

std::string state_line(const ElmState& s) {
    std::ostringstream os;
    os << "e=" << s.surface.e << " b=" << s.surface.b;
    if (s.surface.splitting) os << " splitting=(" << s.surface.splitting->b1 << "," << s.surface.splitting->b2 << ")";
    if (s.trisection) os << " trisection=(3," << s.trisection->cls.fib_deg << ") delta=" << s.delta_total();
    return os.str();
}

std::string step_line(std::size_t i, const ElmStep& st) {
    std::ostringstream os;
    os << "step " << i + 1 << ": elm at " << st.center << " on fiber " << st.fiber << " ("
       << (st.on_min_section ? "on" : "off") << " min section, r=" << st.trisection_multiplicity << ")";
    return os.str();
}

// Compares optional expectations from a scenario's "checks" block.
void expectation_checks(Report& rep, const json& checks, const ElmState& fin) {
    const auto expect_int = [&](const char* key, int got) {
        if (!checks.contains(key)) return;
        const int want = checks.at(key).get<int>();
        rep.check(std::string("expected ") + key, want == got, "want " + str(want) + ", got " + str(got));
    };
    expect_int("final_e", fin.surface.e);
    expect_int("final_delta", fin.delta_total());
    if (fin.trisection) expect_int("final_trisection_fib_deg", fin.trisection->cls.fib_deg);
    if (checks.contains("final_splitting")) {
        const auto& sp = checks.at("final_splitting");
        const bool ok = fin.surface.splitting && sp.is_array() && sp.size() == 2 &&
                        sp[0].get<int>() == fin.surface.splitting->b1 && sp[1].get<int>() == fin.surface.splitting->b2;
        rep.check("expected final_splitting", ok, sp.dump());
    }
}

// ----------------------------------------------------------------- bounds

struct BoundsArgs {
    int g_x = 0;
    int g_y = 0;
    int e = 0;
    std::optional<int> d;
    bool decomposable = false;
    bool indecomposable = false;
    bool raw = false;
    std::string json_out;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
    const int b = a.g_x - 3 * a.g_y + 2;
    if ((b - a.e) % 2 != 0 && !a.raw) {
        err << "error: parity violation: e=" << a.e << " but b = g_x - 3g_y + 2 = " << b
            << " (e and b must have the same parity; pass --raw to waive)\n";
        return kExitInputError;
    }
    if (a.g_y < 0) {
        err << "error: g_y must be non-negative\n";
        return kExitInputError;
    }
    RuledSurfaceModel m;
    m.g_y = a.g_y;
    m.g_x = a.g_x;
    m.b = b;
    m.e = a.e;
    m.n = (a.e + b) / 2;
    m.raw = a.raw;
    if (a.decomposable) m.decomposability = Decomposability::Decomposable;
    if (a.indecomposable) m.decomposability = Decomposability::Indecomposable;

    Report rep("bounds --gx " + str(a.g_x) + " --gy " + str(a.g_y) + " --e " + str(a.e) +
               (a.d ? " --d " + str(*a.d) : ""));
    rep.check("parity", (b - a.e) % 2 == 0 || a.raw, a.raw ? "waived" : "e = b mod 2");

    auto bounds = e_bounds_check(m);
    std::string bounds_note = "admissible";
    if (!bounds.ok() && m.decomposability == Decomposability::Unknown) {
        RuledSurfaceModel dm = m;
        dm.decomposability = Decomposability::Decomposable;
        if (e_bounds_check(dm).ok()) {
            bounds = {};
            bounds_note = "admissible only for a decomposable module";
        }
    }
    if (!bounds.ok()) {
        if (!a.raw) {
            err << "error: no ruled surface with these invariants: " << bounds.violations.front() << "\n";
            return kExitInputError;
        }
        rep.add("e-bounds", CheckStatus::Skip, "waived: " + bounds.violations.front());
    } else {
        rep.check("e-bounds", true, bounds_note);
    }

    const int abs_e = std::abs(a.e);
    const MorphismVerdict cs = cs_classical(a.g_x, a.g_y, 3, a.d.value_or(0));
    const int lower = theorem_b_bound(m);
    const auto upper = theorem_a_threshold(m);
    rep.line("b = g_x - 3g_y + 2 = " + str(a.g_x) + " - " + str(3 * a.g_y) + " + 2 = " + str(b));
    rep.line("classical factoring threshold (g_x - 3g_y + 2)/2 = " + str(b) + "/2 = " + cs.thresholds.cs->to_string());
    rep.line("lower bound (b + |e|)/2 = (" + str(b) + " + " + str(abs_e) + ")/2 = " + str(lower));
    if (upper) {
        rep.line("existence threshold (b + |e|)/2 + 4g_y = " + str(lower) + " + " + str(4 * a.g_y) + " = " + str(*upper));
    } else {
        rep.line("existence threshold: precondition g_x >= 9g_y + 4 fails (" + str(a.g_x) + " < " +
                 str(9 * a.g_y + 4) + ")");
    }
    rep.line("M-invariant m = (b - |e|)/2 - 2 = " + str(m_invariant(m)));

    json& d = rep.data();
    d["b"] = b;
    d["n"] = m.n;
    d["cs_threshold"] = cs.thresholds.cs->to_string();
    d["lower_bound"] = lower;
    d["existence_threshold"] = upper ? json(*upper) : json(nullptr);
    d["m_invariant"] = m_invariant(m);
    if (a.d) {
        const MorphismVerdict v = verdict(m, *a.d);
        std::string kind = to_string(v.verdict);
        if (cs.verdict == Verdict::MustFactor) kind += " (must factor)";
        rep.line("d = " + str(*a.d) + ": " + kind + ": " + v.reason);
        rep.add("verdict", CheckStatus::Pass, kind);
        d["d"] = *a.d;
        d["verdict"] = to_string(v.verdict);
        d["must_factor"] = cs.verdict == Verdict::MustFactor;
        d["reason"] = v.reason;
    }
    return finish(rep, a.json_out, out, err);
}

// ----------------------------------------------------------------- run

int cmd_run(const std::string& path, const std::string& json_out, std::ostream& out, std::ostream& err) {
    Scenario sc;
    try {
        sc = load_scenario_file(path);
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    Report rep("run " + path);
    rep.line("scenario: " + (sc.name.empty() ? path : sc.name));
    rep.line("initial: " + state_line(sc.initial));
    json& data = rep.data();
    data["initial"] = to_json(sc.initial);
    data["steps"] = json::array();

    std::vector<ElmStep> script = sc.script;
    const json& checks = sc.checks;
    std::optional<CharacterizationReport> ch;
    if (checks.contains("characterization")) {
        try {
            ch = minimal_degree_characterization(sc.initial);
        } catch (const Error& ex) {
            rep.check("characterization", false, ex.what());
        }
        if (ch && script.empty()) script = ch->script;
    }

    ElmState cur = sc.initial;
    bool all_applied = true;
    for (std::size_t i = 0; i < script.size(); ++i) {
        const ElmStep& st = script[i];
        const OracleReport o = blowup_oracle_check(cur, st);
        ElmState next;
        try {
            next = apply_elm(cur, st);
        } catch (const Error& ex) {
            rep.check(step_line(i, st), false, ex.what());
            all_applied = false;
            break;
        }
        std::string line = step_line(i, st) + ": e " + str(cur.surface.e) + " -> " + str(next.surface.e);
        if (cur.trisection) {
            line += ", trisection (3," + str(cur.trisection->cls.fib_deg) + ") -> (3," +
                    str(next.trisection->cls.fib_deg) + "), delta " + str(cur.delta_total()) + " -> " +
                    str(next.delta_total());
        }
        line += o.agree ? ", oracle Agree" : ", oracle Disagree";
        rep.line(line);
        for (const auto& n : next.history.back().notes) rep.line("    note: " + n);
        rep.check("oracle step " + str(static_cast<int>(i) + 1), o.agree,
                  o.agree ? "" : o.mismatches.front());
        json js = to_json(st);
        js["e_before"] = cur.surface.e;
        js["e_after"] = next.surface.e;
        js["delta_after"] = next.delta_total();
        js["image_point"] = next.history.back().image_point;
        js["notes"] = next.history.back().notes;
        js["oracle"] = o.agree ? "Agree" : "Disagree";
        if (!o.agree) js["mismatches"] = o.mismatches;
        data["steps"].push_back(js);
        cur = std::move(next);
    }

    if (ch) {
        const json expected = checks.at("characterization");
        rep.line(std::string("characterization: ") + (ch->consistent ? "Consistent" : "Inconsistent") +
                 ", relation sum(q) ~ B2 - B1 " + (ch->relation_holds ? "holds" : "fails") +
                 ", result " + (ch->final_trivial ? "trivial" : "nontrivial"));
        for (const auto& issue : ch->issues) rep.line("    issue: " + issue);
        rep.check("characterization consistent", ch->consistent,
                  ch->issues.empty() ? "" : ch->issues.front());
        if (expected.is_object()) {
            for (const char* key : {"relation_holds", "final_trivial"}) {
                if (!expected.contains(key)) continue;
                const bool want = expected.at(key).get<bool>();
                const bool got = std::string(key) == "relation_holds" ? ch->relation_holds : ch->final_trivial;
                rep.check(std::string("expected ") + key, want == got, want ? "true" : "false");
            }
        }
        data["characterization"] = {{"consistent", ch->consistent},
                                    {"relation_holds", ch->relation_holds},
                                    {"final_trivial", ch->final_trivial},
                                    {"issues", ch->issues}};
    }
    if (all_applied) expectation_checks(rep, checks, cur);
    rep.line("final: " + state_line(cur));
    data["final"] = to_json(cur);
    return finish(rep, json_out, out, err);
}

// ----------------------------------------------------------------- resolve

int cmd_resolve(const std::string& path, bool exhaustive, std::size_t budget, const std::string& json_out,
                std::ostream& out, std::ostream& err) {
    Scenario sc;
    try {
        sc = load_scenario_file(path);
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    Report rep(std::string("resolve ") + path + (exhaustive ? " --exhaustive" : ""));
    rep.line("initial: " + state_line(sc.initial));
    try {
        const ResolveResult r = resolve_singularities(
            sc.initial, exhaustive ? ResolveStrategy::Exhaustive : ResolveStrategy::Greedy, budget);
        for (std::size_t i = 0; i < r.steps.size(); ++i) rep.line(step_line(i, r.steps[i]));
        const int de = std::abs(r.final_state.surface.e - sc.initial.surface.e);
        rep.line("alpha = " + str(r.alpha) + ", initial delta = " + str(r.initial_delta) + ", |de| = " + str(de));
        rep.check("resolved", r.resolved && r.final_state.delta_total() == 0);
        rep.check("alpha <= delta", r.alpha <= r.initial_delta, str(r.alpha) + " <= " + str(r.initial_delta));
        rep.check("|de| <= alpha", de <= r.alpha, str(de) + " <= " + str(r.alpha));
        if (exhaustive) {
            rep.line(std::string("a minimal sequence raising e at every step ") +
                     (r.all_raising_minimal ? "exists" : "does not exist"));
        }
        if (sc.checks.contains("alpha")) {
            const int want = sc.checks.at("alpha").get<int>();
            rep.check("expected alpha", want == r.alpha, "want " + str(want) + ", got " + str(r.alpha));
        }
        json& d = rep.data();
        d["alpha"] = r.alpha;
        d["initial_delta"] = r.initial_delta;
        d["explored"] = r.explored;
        d["all_raising_minimal"] = r.all_raising_minimal;
        d["steps"] = json::array();
        for (const auto& s : r.steps) d["steps"].push_back(to_json(s));
        d["final"] = to_json(r.final_state);
        rep.line("final: " + state_line(r.final_state));
    } catch (const BudgetExceeded& ex) {
        rep.check("resolved", false, ex.what());
    } catch (const Error& ex) {
        rep.check("resolved", false, ex.what());
    }
    return finish(rep, json_out, out, err);
}

// ----------------------------------------------------------------- plan

json plan_json(const ConstructionPlan& p) {
    json j{{"g_y", p.g_y},         {"g_x", p.g_x},
           {"target_d", p.target_d}, {"parity", to_string(p.parity)},
           {"d0", p.d0},           {"route", p.extended ? "Extended" : "Direct"},
           {"t", p.t},             {"t1", p.t1},
           {"t2", p.t2},           {"deg_D", p.deg_D},
           {"deg_Dprime", p.deg_Dprime}, {"deg_B1", p.deg_B1},
           {"deg_B2", p.deg_B2},   {"e_planned", p.e_planned},
           {"halphen_used", p.halphen_used}};
    j["blocks"] = json::array();
    for (const auto& b : p.blocks) j["blocks"].push_back({{"name", b.name}, {"steps", b.end - b.begin}});
    j["elm_script"] = json::array();
    for (const auto& s : p.elm_script) j["elm_script"].push_back(to_json(s));
    return j;
}

int cmd_plan(int g_y, int g_x, int d, bool halphen, const std::string& json_out, std::ostream& out,
             std::ostream& err) {
    PlanOutcome po;
    try {
        po = plan_construction(g_y, g_x, d, halphen);
    } catch (const PreconditionFailed& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    Report rep("plan --gy " + str(g_y) + " --gx " + str(g_x) + " --d " + str(d) + (halphen ? " --halphen" : ""));
    const int b = g_x - 3 * g_y + 2;
    const int d0 = b % 2 == 0 ? b / 2 : (b + 1) / 2;
    rep.line("b = " + str(b) + ", d0 = " + str(d0) + ", t floor = " +
             str(plan_t_floor(g_y, b % 2 == 0 ? Parity::Even : Parity::Odd, halphen)));
    if (!po.plan) {
        rep.line("Infeasible: " + po.reason);
        if (po.in_range) {
            rep.check("plan", false, "in-range degree has no plan: " + po.reason);
        } else {
            rep.add("plan", CheckStatus::Skip, "Infeasible (out of range): " + po.reason);
        }
        rep.data()["status"] = "Infeasible";
        rep.data()["in_range"] = po.in_range;
        rep.data()["reason"] = po.reason;
        return finish(rep, json_out, out, err);
    }
    const ConstructionPlan& p = *po.plan;
    rep.line(std::string(p.extended ? "Extended" : "Direct") + " plan: t=" + str(p.t) +
             (p.extended ? ", t1=" + str(p.t1) + ", t2=" + str(p.t2) : "") + ", deg D=" + str(p.deg_D) +
             ", deg D'=" + str(p.deg_Dprime) + ", deg B1=" + str(p.deg_B1) + ", deg B2=" + str(p.deg_B2) +
             ", e=" + str(p.e_planned) + ", " + str(static_cast<int>(p.elm_script.size())) + " elm steps");
    const ExecutionReport ex = execute_plan(p);
    for (const auto& c : ex.checks) rep.line("  ok: " + c);
    for (const auto& f : ex.failures) rep.line("  FAILED: " + f);
    rep.check("plan invariants", plan_invariant_violations(p).empty());
    rep.check("execution", ex.verified, ex.verified ? "Verified" : ex.failures.front());
    if (ex.final_state) {
        rep.line("final: " + state_line(*ex.final_state));
        rep.check("final fiber degree", ex.final_state->trisection && ex.final_state->trisection->cls.fib_deg == d,
                  "d = " + str(d));
        rep.check("final surface trivial", ex.final_state->surface.e == 0 && ex.final_state->surface.splitting &&
                                               ex.final_state->surface.splitting->b1 == ex.final_state->surface.splitting->b2);
    }
    json& data = rep.data();
    data["status"] = ex.verified ? "Verified" : "Failed";
    data["plan"] = plan_json(p);
    data["trace"] = {{"checks", ex.checks}, {"failures", ex.failures}};
    data["family_intersection"] = ex.family_intersection;
    if (ex.final_state) data["final"] = to_json(*ex.final_state);
    return finish(rep, json_out, out, err);
}

// ----------------------------------------------------------------- verify-paper

int cmd_verify(const std::string& grid, std::uint64_t seed, const std::vector<std::string>& suites,
               const std::string& json_out, std::ostream& out, std::ostream& err) {
    VerifyOptions opt;
    opt.grid = grid == "large" ? Grid::Large : Grid::Default;
    opt.seed = seed;
    std::vector<std::string> chosen = suites.empty() ? suite_names() : suites;
    for (const auto& s : chosen) {
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
            err << "error: unknown suite '" << s << "'\n";
            return kExitInputError;
        }
    }
    Report rep("verify-paper --grid " + grid + " --seed " + std::to_string(seed));
    json& data = rep.data();
    data["seed"] = seed;
    data["grid"] = grid;
    data["suites"] = json::array();
    for (const auto& name : chosen) {
        const SuiteResult r = run_suite(name, opt);
        std::ostringstream det;
        det << r.cases << " cases, " << r.failure_count << " failures, " << r.seconds << " s";
        if (!r.failures.empty()) det << "; first: " << r.failures.front();
        rep.check(name, r.passed, det.str());
        data["suites"].push_back({{"name", name},
                                  {"passed", r.passed},
                                  {"cases", r.cases},
                                  {"failures", r.failure_count},
                                  {"examples", r.failures},
                                  {"seconds", r.seconds},
                                  {"details", r.details}});
    }
    return finish(rep, json_out, out, err);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Triple covers, ruled surfaces and elementary transformations"};
    app.require_subcommand(1);

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Degree bounds and verdict for pencils on a triple cover");
    bounds->add_option("--gx", ba.g_x, "genus of the cover X")->required();
    bounds->add_option("--gy", ba.g_y, "genus of the base Y")->required();
    bounds->add_option("--e", ba.e, "e-invariant of the Tschirnhausen surface")->required();
    bounds->add_option("--d", ba.d, "pencil degree to classify");
    bounds->add_flag("--decomposable", ba.decomposable, "the Tschirnhausen module splits");
    bounds->add_flag("--indecomposable", ba.indecomposable, "the Tschirnhausen module does not split");
    bounds->add_flag("--raw", ba.raw, "waive parity and bounds checks");
    bounds->add_option("--json-out", ba.json_out, "write the JSON report here");

    std::string run_path, run_json;
    auto* run = app.add_subcommand("run", "Execute a scenario's elm script with oracle checks");
    run->add_option("scenario", run_path, "scenario JSON file")->required();
    run->add_option("--json-out", run_json, "write the JSON report here");

    std::string res_path, res_json;
    bool res_exhaustive = false;
    std::size_t res_budget = 200000;
    auto* resolve = app.add_subcommand("resolve", "Resolve the trisection's singularities by elm steps");
    resolve->add_option("scenario", res_path, "scenario JSON file")->required();
    resolve->add_flag("--exhaustive", res_exhaustive, "breadth-first search for a shortest sequence");
    resolve->add_option("--budget", res_budget, "state expansion budget for --exhaustive");
    resolve->add_option("--json-out", res_json, "write the JSON report here");

    int p_gy = 0, p_gx = 0, p_d = 0;
    bool p_halphen = false;
    std::string p_json;
    auto* plan = app.add_subcommand("plan", "Plan and verify a pencil construction of degree d");
    plan->add_option("--gy", p_gy, "genus of the base Y")->required();
    plan->add_option("--gx", p_gx, "genus of the cover X")->required();
    plan->add_option("--d", p_d, "target degree")->required();
    plan->add_flag("--halphen", p_halphen, "use the sharper floor for t");
    plan->add_option("--json-out", p_json, "write the JSON report here");

    std::string v_grid = "default", v_json;
    std::uint64_t v_seed = kDefaultSeed;
    std::vector<std::string> v_suites;
    auto* vp = app.add_subcommand("verify-paper", "Run the identity and property suites");
    vp->add_option("--grid", v_grid, "grid size")->check(CLI::IsMember({"default", "large"}));
    vp->add_option("--seed", v_seed, "seed for randomized suites");
    vp->add_option("--suite", v_suites, "run only the named suites (repeatable)");
    vp->add_option("--json-out", v_json, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }

    try {
        if (*bounds) {
            if (ba.decomposable && ba.indecomposable) {
                err << "error: --decomposable and --indecomposable are exclusive\n";
                return kExitInputError;
            }
            return cmd_bounds(ba, out, err);
        }
        if (*run) return cmd_run(run_path, run_json, out, err);
        if (*resolve) return cmd_resolve(res_path, res_exhaustive, res_budget, res_json, out, err);
        if (*plan) return cmd_plan(p_gy, p_gx, p_d, p_halphen, p_json, out, err);
        if (*vp) return cmd_verify(v_grid, v_seed, v_suites, v_json, out, err);
    } catch (const SchemaError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitFail;
    }
    return kExitInputError;
}

}  // namespace trisect
