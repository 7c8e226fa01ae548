#include "trisect/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

#include "trisect/errors.hpp"
#include "trisect/theorems.hpp"

namespace trisect {

namespace {

int uni(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937_64& rng, int one_in = 2) { return uni(rng, 1, one_in) == 1; }

struct Collector {
    SuiteResult& res;
    void fail(std::string msg) {
        ++res.failure_count;
        if (res.failures.size() < 8) res.failures.push_back(std::move(msg));
    }
    void expect(bool ok, const std::function<std::string()>& msg) {
        ++res.cases;
        if (!ok) fail(msg());
    }
};

// e values allowed for some decomposability type, with the parity of b.
std::vector<int> valid_e(int g_y, int b) {
    std::vector<int> out;
    const int hi = std::max(2 * g_y - 2, b / 3);
    for (int e = -g_y; e <= hi; ++e) {
        if ((e - b) % 2 != 0) continue;
        if (e < 0 && g_y == 0) continue;
        out.push_back(e);
    }
    return out;
}

// Tschirnhausen model with a decomposability type that makes e admissible.
RuledSurfaceModel admissible_model(int g_y, int g_x, int e) {
    const int b = g_x - 3 * g_y + 2;
    const bool needs_split = g_y == 0 || e > 2 * g_y - 2;
    std::optional<Splitting> sp;
    if (needs_split) sp = Splitting{(b - e) / 2, (b + e) / 2};
    return RuledSurfaceModel::tschirnhausen(g_y, g_x, e, sp);
}

std::string fmt_case(int g_y, int g_x, int e) {
    return "g_y=" + std::to_string(g_y) + " g_x=" + std::to_string(g_x) + " e=" + std::to_string(e);
}

TrackedSection* find_section(ElmState& s, const std::string& id) {
    for (auto& sec : s.sections)
        if (sec.id == id) return &sec;
    return nullptr;
}

bool fiber_free(const ElmState& s, const TrackedSection& sec, const std::string& fiber) {
    for (const auto& p : sec.marked_points) {
        auto it = s.point_fibers.find(p);
        if (it != s.point_fibers.end() && it->second == fiber) return false;
    }
    return true;
}

// Random nested `through` levels for a chain, starting from `first`. Two
// sections may share the i-th infinitely near point only if they meet at
// least i+1 times.
std::vector<std::set<std::string>> nested_levels(std::mt19937_64& rng, const ElmState& s,
                                                 const std::set<std::string>& first, std::size_t len) {
    std::vector<std::set<std::string>> out{first};
    for (std::size_t j = 1; j < len; ++j) {
        std::set<std::string> lvl;
        for (const auto& id : out.back())
            if (coin(rng)) lvl.insert(id);
        bool ok = true;
        for (const auto& a : lvl)
            for (const auto& b : lvl)
                if (a < b && intersect(s.section(a)->cls, s.section(b)->cls, s.surface) < static_cast<int>(j) + 1)
                    ok = false;
        if (!ok) lvl.clear();
        out.push_back(lvl);
    }
    return out;
}

// Subset of `pool` whose members pairwise meet.
std::set<std::string> meeting_subset(std::mt19937_64& rng, const ElmState& s,
                                     const std::vector<std::string>& pool, int one_in) {
    std::set<std::string> out;
    for (const auto& id : pool) {
        if (!coin(rng, one_in)) continue;
        bool ok = true;
        for (const auto& o : out)
            if (intersect(s.section(o)->cls, s.section(id)->cls, s.surface) < 1) ok = false;
        if (ok) out.insert(id);
    }
    return out;
}

void mark(ElmState& s, const std::string& point, const std::string& fiber, const std::set<std::string>& on) {
    s.point_fibers[point] = fiber;
    for (const auto& id : on) find_section(s, id)->marked_points.insert(point);
}

// Points on a fresh fiber, leaving room for `budget` trisection multiplicity.
void add_points_on_fiber(std::mt19937_64& rng, ElmState& s, const std::string& fiber,
                         const std::string& prefix, int budget, const std::set<std::string>& excluded) {
    if (budget <= 0 || !s.trisection) return;
    s.ledger.declare(fiber, 1);
    std::vector<std::string> pool;
    for (const auto& sec : s.sections)
        if (!excluded.count(sec.id) && fiber_free(s, sec, fiber)) pool.push_back(sec.id);

    if (budget >= 2 && coin(rng)) {
        SingularityProfile p;
        p.point = prefix;
        p.fiber = fiber;
        p.chain = {uni(rng, 2, budget)};
        if (coin(rng)) p.chain.push_back(2);
        p.through = nested_levels(rng, s, meeting_subset(rng, s, pool, 3), p.chain.size());
        mark(s, p.point, fiber, p.through.front());
        s.trisection->singularities.push_back(std::move(p));
        return;
    }
    const int k = uni(rng, 1, budget);
    for (int i = 1; i <= k; ++i) {
        const std::string pt = prefix + std::to_string(i);
        std::set<std::string> on;
        for (auto it = pool.begin(); it != pool.end();) {
            if (coin(rng, 3)) {
                on.insert(*it);
                it = pool.erase(it);
                break;
            }
            ++it;
        }
        mark(s, pt, fiber, on);
        s.trisection->smooth_points.insert(pt);
    }
}

}  // namespace

RandomElmCase random_elm_case(std::mt19937_64& rng, int branch) {
    const bool on_min = (branch & 1) != 0;
    const int r = (branch / 2) % 4;
    for (;;) {
        const int g_y = uni(rng, 0, 3);
        const int b = uni(rng, 4, 30);
        const auto es = valid_e(g_y, b);
        if (es.empty()) continue;
        const int e = es[uni(rng, 0, static_cast<int>(es.size()) - 1)];
        const bool needs_split = g_y == 0 || e > 2 * g_y - 2;
        std::optional<Splitting> sp;
        if (e >= 0 && (needs_split || coin(rng))) sp = Splitting{(b - e) / 2, (b + e) / 2};
        RuledSurfaceModel m = RuledSurfaceModel::tschirnhausen(g_y, b + 3 * g_y - 2, e, sp);
        if (!sp && !needs_split && coin(rng, 3)) m.decomposability = Decomposability::Indecomposable;
        if (!e_bounds_check(m).ok()) continue;

        ElmState s;
        s.surface = m;
        auto& L = s.ledger;
        const int z_s = (e >= 1 && coin(rng)) ? e : std::max(e, 0) + uni(rng, 1, 3);
        const int z_t = std::max(e, 0) + uni(rng, 1, 5);
        const int z_x = (3 * e + b) / 2;
        L.declare("ZT", z_t);
        L.declare("ZX", z_x);
        FormalDivisor f_s("ZS");
        if (sp) {
            L.declare("B1", sp->b1);
            L.declare("B2", sp->b2);
        }
        if (sp && z_s == e) {
            f_s = FormalDivisor("B2") - FormalDivisor("B1");
        } else {
            L.declare("ZS", z_s);
        }
        s.sections.push_back({"S0", {1, 0, FormalDivisor()}, {}});
        s.sections.push_back({"S", {1, z_s, f_s}, {}});
        s.sections.push_back({"T", {1, z_t, FormalDivisor("ZT")}, {}});
        if (sp) {
            s.formal_splitting = FormalSplitting{FormalDivisor("B1"), FormalDivisor("B2"), "S0",
                                                 (z_s == e && e >= 1) ? "S" : ""};
        }
        TrackedTrisection t;
        t.cls = {3, z_x, FormalDivisor("ZX")};
        s.trisection = t;

        if (coin(rng, 3)) {
            ElmStep pre;
            pre.center = "A";
            pre.fiber = "a";
            pre.on_min_section = coin(rng);
            if (pre.on_min_section) pre.on_sections = {"S0"};
            s = apply_elm(s, pre);
        }

        ElmStep step;
        step.center = "C";
        step.fiber = "c";
        step.on_min_section = on_min;
        step.trisection_multiplicity = r;
        if (on_min) {
            step.on_sections.insert("S0");
            for (const char* id : {"S", "T"}) {
                if (!coin(rng, 3)) continue;
                bool ok = true;
                for (const auto& o : step.on_sections)
                    if (intersect(s.section(o)->cls, s.section(id)->cls, s.surface) < 1) ok = false;
                if (ok) step.on_sections.insert(id);
            }
        } else {
            const int pick = uni(rng, 0, 2);
            const char* id = pick == 1 ? "S" : pick == 2 ? "T" : nullptr;
            if (id && !s.section(id)->is_min_degree()) step.on_sections.insert(id);
        }
        // With e > 0 every minimal-degree section must contain an on-min center.
        if (on_min && s.surface.e > 0) {
            bool ok = true;
            for (const auto& sec : s.sections)
                if (sec.is_min_degree() && !step.on_sections.count(sec.id)) ok = false;
            if (!ok) continue;
        }
        s.ledger.declare("c", 1);
        if (!step.on_sections.empty() || r >= 1) mark(s, "C", "c", step.on_sections);

        if (r == 1 && coin(rng)) s.trisection->smooth_points.insert("C");
        if (r >= 2) {
            SingularityProfile p;
            p.point = "C";
            p.fiber = "c";
            p.chain = {r};
            const int tail = uni(rng, 0, 2);
            for (int i = 0; i < tail; ++i) p.chain.push_back(p.chain.back() == 3 && coin(rng) ? 3 : 2);
            p.through = nested_levels(rng, s, step.on_sections, p.chain.size());
            s.trisection->singularities.push_back(std::move(p));
        }
        if (coin(rng)) add_points_on_fiber(rng, s, "c", "O", 3 - r, step.on_sections);
        const int extras = uni(rng, 0, 2);
        for (int i = 1; i <= extras; ++i) {
            add_points_on_fiber(rng, s, "p" + std::to_string(i), "P" + std::to_string(i), uni(rng, 1, 3), {});
        }
        return {std::move(s), std::move(step)};
    }
}

ElmState random_singular_state(std::mt19937_64& rng, int max_delta) {
    static const std::vector<std::vector<int>> chains = {{2}, {2, 2}, {2, 2, 2}, {3}, {3, 2}, {3, 3}, {2, 2, 2, 2}};
    const auto delta_of = [](const std::vector<int>& c) {
        int d = 0;
        for (int r : c) d += r * (r - 1) / 2;
        return d;
    };
    for (;;) {
        const int g_y = uni(rng, 0, 2);
        const int b = uni(rng, 6, 20);
        std::vector<int> es;
        for (int e : valid_e(g_y, b))
            if (e <= 3) es.push_back(e);
        if (es.empty()) continue;
        const int e = es[uni(rng, 0, static_cast<int>(es.size()) - 1)];
        ElmState s;
        s.surface = RuledSurfaceModel::from_bundle(g_y, b, e);
        if (e >= 0) {
            s.surface.splitting = Splitting{(b - e) / 2, (b + e) / 2};
            s.surface.decomposability = Decomposability::Decomposable;
        }
        const int z_s = (e >= 1 && coin(rng)) ? e : std::max(e, 0) + uni(rng, 1, 3);
        s.sections.push_back({"S0", {1, 0, std::nullopt}, {}});
        s.sections.push_back({"S", {1, z_s, std::nullopt}, {}});
        s.trisection = TrackedTrisection{{3, (3 * e + b) / 2, std::nullopt}, {}, {}};

        // S and S0 meet in S.S0 points, counted with infinitely near ones.
        int meet_left = intersect(s.sections[0].cls, s.sections[1].cls, s.surface);
        int remaining = uni(rng, 1, max_delta);
        for (int i = 1; remaining > 0; ++i) {
            std::vector<const std::vector<int>*> fit;
            for (const auto& c : chains)
                if (delta_of(c) <= remaining) fit.push_back(&c);
            const auto& chain = *fit[uni(rng, 0, static_cast<int>(fit.size()) - 1)];
            remaining -= delta_of(chain);
            SingularityProfile p;
            p.point = "P" + std::to_string(i);
            p.fiber = "p" + std::to_string(i);
            p.chain = chain;
            s.ledger.declare(p.fiber, 1);
            p.through = nested_levels(rng, s, meeting_subset(rng, s, {"S0", "S"}, 2), chain.size());
            bool drop = false;
            for (auto& lvl : p.through) {
                if (lvl.size() < 2) continue;
                if (drop || meet_left == 0) {
                    drop = true;
                    lvl.erase("S");
                } else {
                    --meet_left;
                }
            }
            mark(s, p.point, p.fiber, p.through.front());
            s.trisection->singularities.push_back(std::move(p));
        }
        return s;
    }
}

ElmState minimal_degree_shape(int g_y, int nodes, int trisection_fib_deg) {
    ElmState s;
    s.surface = RuledSurfaceModel::product(g_y);
    s.sections.push_back({"S0", SurfaceClass::min_section(), {}});
    s.trisection = TrackedTrisection{{3, trisection_fib_deg, std::nullopt}, {}, {}};
    for (int i = 1; i <= nodes; ++i) {
        SingularityProfile p{"P" + std::to_string(i), "p" + std::to_string(i), {2}, {{"S0"}}};
        s.ledger.declare(p.fiber, 1);
        mark(s, p.point, p.fiber, {"S0"});
        s.trisection->singularities.push_back(std::move(p));
    }
    return s;
}

namespace {

void suite_adjunction(const VerifyOptions& opt, SuiteResult& res) {
    Collector c{res};
    const int gy_max = opt.grid == Grid::Large ? 8 : 4;
    const int b_max = opt.grid == Grid::Large ? 120 : 40;
    for (int g_y = 0; g_y <= gy_max; ++g_y) {
        for (int b = 1; b <= b_max; ++b) {
            for (int e : valid_e(g_y, b)) {
                const int g_x = b + 3 * g_y - 2;
                const RuledSurfaceModel m = admissible_model(g_y, g_x, e);
                const int pa = arithmetic_genus(trisection_cover_class(m), m);
                c.expect(pa == b + 3 * g_y - 2 && e_bounds_check(m).ok(), [&] {
                    return fmt_case(g_y, g_x, e) + ": p_a=" + std::to_string(pa);
                });
            }
        }
    }
}

void suite_product(const VerifyOptions& opt, SuiteResult& res) {
    Collector c{res};
    const int gy_max = opt.grid == Grid::Large ? 10 : 4;
    const int d_max = opt.grid == Grid::Large ? 200 : 60;
    for (int g_y = 0; g_y <= gy_max; ++g_y) {
        const RuledSurfaceModel m = RuledSurfaceModel::product(g_y);
        for (int d = 1; d <= d_max; ++d) {
            const int pa = arithmetic_genus({3, d, std::nullopt}, m);
            c.expect(pa == 2 * d + 3 * g_y - 2, [&] {
                return "g_y=" + std::to_string(g_y) + " d=" + std::to_string(d) + ": p_a=" + std::to_string(pa);
            });
        }
        const int ps = arithmetic_genus(SurfaceClass::min_section(), m);
        c.expect(ps == g_y, [&] { return "section genus " + std::to_string(ps) + " on g_y=" + std::to_string(g_y); });
    }
}

void suite_oracle(const VerifyOptions& opt, SuiteResult& res) {
    Collector c{res};
    std::mt19937_64 rng(opt.seed);
    std::map<std::string, int> coverage;
    const int n = opt.grid == Grid::Large ? 10 * opt.oracle_cases : opt.oracle_cases;
    for (int i = 0; i < n; ++i) {
        const int branch = i % 8;
        RandomElmCase rc = random_elm_case(rng, branch);
        const OracleReport o = blowup_oracle_check(rc.state, rc.step);
        const std::string key = std::string(rc.step.on_min_section ? "on-min" : "off-min") + "/" +
                                (rc.step.trisection_multiplicity == 0 ? "off-X" : "on-X");
        coverage[key] += 1;
        coverage["r=" + std::to_string(rc.step.trisection_multiplicity)] += 1;
        c.expect(o.agree, [&] {
            return "case " + std::to_string(i) + " (" + key + ", r=" +
                   std::to_string(rc.step.trisection_multiplicity) + "): " + o.mismatches.front();
        });
    }
    for (const char* k : {"on-min/off-X", "on-min/on-X", "off-min/off-X", "off-min/on-X"}) {
        c.expect(coverage[k] > 0, [&] { return std::string("branch ") + k + " never exercised"; });
    }
    res.details["coverage"] = coverage;
}

void suite_inverse(const VerifyOptions& opt, SuiteResult& res) {
    Collector c{res};
    std::mt19937_64 rng(opt.seed + 1);
    const int n = opt.grid == Grid::Large ? 10 * opt.inverse_cases : opt.inverse_cases;
    int layered = 0;
    for (int i = 0; i < n; ++i) {
        RandomElmCase rc = random_elm_case(rng, i % 8);
        try {
            const ElmState after = apply_elm(rc.state, rc.step);
            const ElmState back = apply_inverse(after);
            c.expect(back == rc.state, [&] { return "case " + std::to_string(i) + ": round trip differs"; });
            ElmStep second;
            second.center = "G";
            second.fiber = "g";
            second.on_min_section = coin(rng);
            if (second.on_min_section) {
                for (const auto& sec : after.sections)
                    if (sec.is_min_degree()) second.on_sections.insert(sec.id);
            }
            if (second.on_min_section && second.on_sections.empty()) second.on_min_section = false;
            ++layered;
            const ElmState twice = apply_elm(after, second);
            c.expect(apply_inverse(apply_inverse(twice)) == rc.state,
                     [&] { return "case " + std::to_string(i) + ": two-step round trip differs"; });
        } catch (const Error& ex) {
            c.fail("case " + std::to_string(i) + ": " + ex.what());
        }
    }
    res.details["layered_cases"] = layered;
}

void suite_resolution(const VerifyOptions& opt, SuiteResult& res) {
    Collector c{res};
    std::mt19937_64 rng(opt.seed + 2);
    const int n = opt.grid == Grid::Large ? 4 * opt.resolution_cases : opt.resolution_cases;
    long exhaustive_runs = 0;
    for (int i = 0; i < n; ++i) {
        const ElmState s = random_singular_state(rng, 6);
        const int D = s.delta_total();
        const std::string tag = "case " + std::to_string(i) + " (delta " + std::to_string(D) + ")";
        try {
            const ResolveResult g = resolve_singularities(s, ResolveStrategy::Greedy);
            ElmState cur = s;
            bool drops_ok = true;
            for (const auto& step : g.steps) {
                const int before = cur.delta_total();
                cur = apply_elm(cur, step);
                const int r = step.trisection_multiplicity;
                const int k = 3 - r;
                if (before - cur.delta_total() != r * (r - 1) / 2 - k * (k - 1) / 2) drops_ok = false;
            }
            c.expect(drops_ok, [&] { return tag + ": a greedy step changed delta by the wrong amount"; });
            c.expect(g.resolved && g.alpha <= D && g.final_state.delta_total() == 0, [&] {
                return tag + ": greedy resolved=" + std::to_string(g.resolved) + " length " +
                       std::to_string(g.alpha);
            });
            if (!g.resolved || !drops_ok) continue;
            const ResolveResult x = resolve_singularities(s, ResolveStrategy::Exhaustive, opt.exhaustive_budget);
            ++exhaustive_runs;
            const int de = std::abs(x.final_state.surface.e - s.surface.e);
            c.expect(x.resolved && de <= x.alpha && x.alpha <= D && x.alpha <= g.alpha, [&] {
                return tag + ": exhaustive alpha " + std::to_string(x.alpha) + ", |de| " + std::to_string(de);
            });
        } catch (const Error& ex) {
            c.fail(tag + ": " + ex.what());
        }
    }
    int shapes = 0;
    for (int g_y = 0; g_y <= 2; ++g_y) {
        for (int e = 1; e <= 3; ++e) {
            for (int d : {2 * e + 1, 2 * e + 4}) {
                ++shapes;
                const ElmState s = minimal_degree_shape(g_y, e, d);
                const std::string tag = "shape g_y=" + std::to_string(g_y) + " e=" + std::to_string(e);
                try {
                    const ResolveResult x = resolve_singularities(s, ResolveStrategy::Exhaustive, opt.exhaustive_budget);
                    c.expect(x.resolved && x.alpha == e && x.all_raising_minimal && x.final_state.surface.e == e,
                             [&] { return tag + ": alpha " + std::to_string(x.alpha); });
                } catch (const Error& ex) {
                    c.fail(tag + ": " + ex.what());
                }
            }
        }
    }
    res.details["exhaustive_runs"] = exhaustive_runs;
    res.details["minimal_shapes"] = shapes;
}

void suite_bounds(const VerifyOptions& opt, SuiteResult& res) {
    Collector c{res};
    const int gy_max = opt.grid == Grid::Large ? 8 : 4;
    const int b_max = opt.grid == Grid::Large ? 120 : 40;
    for (int g_y = 0; g_y <= gy_max; ++g_y) {
        for (int b = 1; b <= b_max; ++b) {
            for (int e : valid_e(g_y, b)) {
                const int g_x = b + 3 * g_y - 2;
                const RuledSurfaceModel m = admissible_model(g_y, g_x, e);
                const int bound = theorem_b_bound(m);
                const auto cs = cs_classical(g_x, g_y, 3, bound).thresholds.cs;
                const auto a = theorem_a_threshold(m);
                const bool ordered = cs->num <= static_cast<long long>(bound) * cs->den && (!a || bound <= *a) &&
                                     (b + std::abs(e)) % 2 == 0;
                c.expect(ordered, [&] { return fmt_case(g_y, g_x, e) + ": thresholds out of order"; });
                for (int d = 0; static_cast<long long>(d) * cs->den < cs->num; ++d) {
                    if (verdict(m, d).verdict != Verdict::Impossible) {
                        c.fail(fmt_case(g_y, g_x, e) + ": d=" + std::to_string(d) + " below CS but not Impossible");
                        break;
                    }
                }
            }
        }
    }
    const RuledSurfaceModel trig = RuledSurfaceModel::tschirnhausen(0, 5, 1, Splitting{3, 4});
    const int bound = theorem_b_bound(trig);
    const int m = m_invariant(trig);
    c.expect(bound == 4 && m == 1 && bound == trig.g_x - m, [&] {
        return "trigonal cross-check: bound " + std::to_string(bound) + ", m " + std::to_string(m);
    });
    c.expect(verdict(trig, 3).verdict == Verdict::Impossible, [] { return "trigonal d=3 not Impossible"; });
    res.details["maroni"] = {{"g_x", 5}, {"bound", bound}, {"m", m}};
}

void suite_h0(const VerifyOptions& opt, SuiteResult& res) {
    Collector c{res};
    const int gy_max = opt.grid == Grid::Large ? 4 : 2;
    const int span = opt.grid == Grid::Large ? 60 : 20;
    for (int g_y = 1; g_y <= gy_max; ++g_y) {
        for (int g_x = 9 * g_y + 4; g_x <= 9 * g_y + span; ++g_x) {
            const int b = g_x - 3 * g_y + 2;
            for (int e : valid_e(g_y, b)) {
                const RuledSurfaceModel m = admissible_model(g_y, g_x, e);
                try {
                    const PencilRanges pr = pencil_degree_range(m);
                    c.expect(pr.construction_min == *theorem_a_threshold(m), [&] {
                        return fmt_case(g_y, g_x, e) + ": construction min " + std::to_string(pr.construction_min);
                    });
                    for (int a = 2 * g_y - 1; a <= m_invariant(m); ++a) {
                        const H0Chain h = h0_chain(m, a);
                        const int want = g_x - g_y - 2 * a;
                        c.expect(h.h0_surface == want && h.h0_KX_fA == want && h.cut_out && h.vanishing_degree < 0,
                                 [&] {
                                     return fmt_case(g_y, g_x, e) + " a=" + std::to_string(a) + ": h0 " +
                                            std::to_string(h.h0_surface) + "/" + std::to_string(h.h0_KX_fA) +
                                            ", want " + std::to_string(want);
                                 });
                    }
                } catch (const Error& ex) {
                    c.fail(fmt_case(g_y, g_x, e) + ": " + ex.what());
                }
            }
        }
    }
}

void suite_planner(const VerifyOptions& opt, SuiteResult& res) {
    Collector c{res};
    struct Job {
        int g_y, g_x;
        bool halphen;
    };
    std::vector<Job> jobs;
    if (opt.grid == Grid::Large) {
        for (int g_y = 1; g_y <= 3; ++g_y)
            for (int g_x = 37 * g_y - 2; g_x <= 37 * g_y + 7; ++g_x) {
                jobs.push_back({g_y, g_x, false});
                if (g_y >= 2) jobs.push_back({g_y, g_x, true});
            }
    } else {
        for (int g_y = 1; g_y <= 2; ++g_y)
            for (int off : {-2, 0, 6}) jobs.push_back({g_y, 37 * g_y + off, false});
    }
    const int span = opt.grid == Grid::Large ? 25 : 15;
    int extended = 0;
    for (const auto& j : jobs) {
        const int b = j.g_x - 3 * j.g_y + 2;
        const int d0 = b % 2 == 0 ? b / 2 : (b + 1) / 2;
        for (int d = d0 + j.g_y; d <= d0 + j.g_y + span; ++d) {
            const std::string tag = "g_y=" + std::to_string(j.g_y) + " g_x=" + std::to_string(j.g_x) +
                                    " d=" + std::to_string(d) + (j.halphen ? " halphen" : "");
            try {
                const PlanOutcome out = plan_construction(j.g_y, j.g_x, d, j.halphen);
                if (!out.plan) {
                    // Below the Halphen floor the degree is legitimately out of range.
                    c.expect(!out.in_range, [&] { return tag + ": Infeasible (" + out.reason + ")"; });
                    continue;
                }
                if (out.plan->extended) ++extended;
                const ExecutionReport ex = execute_plan(*out.plan);
                const bool final_ok = ex.final_state && ex.final_state->surface.e == 0 &&
                                      ex.final_state->trisection->cls.fib_deg == d;
                c.expect(ex.verified && final_ok, [&] {
                    return tag + ": " + (ex.failures.empty() ? std::string("final state wrong") : ex.failures.front());
                });
            } catch (const Error& ex) {
                c.fail(tag + ": " + ex.what());
            }
        }
    }
    res.details["extended_plans"] = extended;
}

const std::map<std::string, std::function<void(const VerifyOptions&, SuiteResult&)>>& registry() {
    static const std::map<std::string, std::function<void(const VerifyOptions&, SuiteResult&)>> r = {
        {"adjunction-grid", suite_adjunction}, {"product-genus", suite_product},
        {"elm-oracle", suite_oracle},          {"invertibility", suite_inverse},
        {"resolution", suite_resolution},      {"bounds-ordering", suite_bounds},
        {"h0-chain", suite_h0},                {"planner-roundtrip", suite_planner},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"adjunction-grid", "product-genus", "elm-oracle",
                                                   "invertibility",   "resolution",    "bounds-ordering",
                                                   "h0-chain",        "planner-roundtrip"};
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
    SuiteResult res;
    res.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        it->second(opt, res);
    } catch (const std::exception& ex) {
        ++res.failure_count;
        res.failures.push_back(std::string("suite aborted: ") + ex.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.passed = res.failure_count == 0 && res.cases > 0;
    return res;
}

}  // namespace trisect
