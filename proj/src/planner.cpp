#include <algorithm>

#include "trisect/errors.hpp"
#include "trisect/theorems.hpp"

namespace trisect {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

namespace {

int ceil_half(int x) { return (x + 1) / 2; }

struct Frame {
    int b;
    int d0;
    Parity parity;
};

Frame frame_for(int g_y, int g_x) {
    const int b = g_x - 3 * g_y + 2;
    const Parity parity = b % 2 == 0 ? Parity::Even : Parity::Odd;
    return {b, parity == Parity::Even ? b / 2 : (b + 1) / 2, parity};
}

int t_ceiling(int g_y, int d0) { return (d0 - 2 * g_y) / 3; }

// Degree of the Direct-route pencil for a given t.
int direct_degree(int d0, int t, Parity parity) { return parity == Parity::Even ? d0 + t : d0 + t - 1; }

void fill_degrees(ConstructionPlan& p) {
    if (p.parity == Parity::Even) {
        p.deg_D = 2 * p.t;
        p.deg_Dprime = p.d0 - 3 * p.t;
        p.deg_B1 = p.d0 - p.t;
        p.deg_B2 = p.d0 + p.t;
    } else {
        p.deg_D = 2 * p.t - 1;
        p.deg_Dprime = p.d0 - 3 * p.t + 1;
        p.deg_B1 = p.d0 - p.t;
        p.deg_B2 = p.d0 + p.t - 1;
    }
    p.e_planned = p.deg_B2 - p.deg_B1;
}

ElmStep make_step(const std::string& center, const std::string& fiber, bool on_min,
                  const std::string& section, int r) {
    ElmStep s;
    s.center = center;
    s.fiber = fiber;
    s.on_min_section = on_min;
    s.on_sections = {section};
    s.trisection_multiplicity = r;
    return s;
}

void build_script(ConstructionPlan& p) {
    p.elm_script.clear();
    p.blocks.clear();
    const auto block = [&](const std::string& name, int count, const std::string& pt,
                           const std::string& fib, bool on_min, const std::string& sec, int r) {
        ScriptBlock b{name, p.elm_script.size(), 0};
        for (int i = 1; i <= count; ++i) {
            p.elm_script.push_back(make_step(pt + std::to_string(i), fib + std::to_string(i), on_min, sec, r));
        }
        b.end = p.elm_script.size();
        if (count > 0) p.blocks.push_back(b);
    };
    if (p.extended) {
        block("T3", p.t1 + p.t2, "X", "x", true, "S0", 0);
        block("T1", p.t1, "U", "u", false, "S", 1);
        block("T2", p.t2, "V", "v", false, "S", 0);
    }
    block("T", p.deg_D, "P", "y", false, "S", 1);
}

}  // namespace

int plan_t_floor(int g_y, Parity parity, bool use_halphen) {
    if (use_halphen) return parity == Parity::Even ? ceil_half(g_y + 3) : ceil_half(g_y + 4);
    return parity == Parity::Even ? g_y : g_y + 1;
}

PlanOutcome plan_construction(int g_y, int g_x, int d, bool use_halphen) {
    if (g_y < 1) throw PreconditionFailed("construction planning needs g_y >= 1");
    if (g_x < 37 * g_y - 2) throw PreconditionFailed("construction planning needs g_x >= 37g_y - 2");
    if (use_halphen && g_y < 2) throw PreconditionFailed("Halphen mode needs g_y >= 2");

    const Frame fr = frame_for(g_y, g_x);
    const int t_lo = plan_t_floor(g_y, fr.parity, use_halphen);
    const int t_hi = t_ceiling(g_y, fr.d0);

    PlanOutcome out;
    const int lowest = direct_degree(fr.d0, t_lo, fr.parity);
    out.in_range = d >= lowest;
    if (!out.in_range) {
        out.reason = "d=" + std::to_string(d) + " is below the construction bound " + std::to_string(lowest);
        return out;
    }
    if (t_hi < t_lo) {
        out.reason = "empty t bracket [" + std::to_string(t_lo) + ", " + std::to_string(t_hi) + "]";
        return out;
    }

    ConstructionPlan p;
    p.g_y = g_y;
    p.g_x = g_x;
    p.target_d = d;
    p.parity = fr.parity;
    p.d0 = fr.d0;
    p.halphen_used = use_halphen;

    const int t_direct = fr.parity == Parity::Even ? d - fr.d0 : d - fr.d0 + 1;
    if (t_direct >= t_lo && t_direct <= t_hi) {
        p.t = t_direct;
        fill_degrees(p);
        build_script(p);
        out.plan = p;
        return out;
    }

    for (int t = t_lo; t <= t_hi; ++t) {
        p.t = t;
        fill_degrees(p);
        const int rest = d - direct_degree(fr.d0, t, fr.parity);
        const int t1_hi = 2 * p.deg_B2 - p.deg_B1;
        for (int t2 = 0; 3 * t2 <= rest; ++t2) {
            const int twice_t1 = rest - 3 * t2;
            if (twice_t1 % 2 != 0) continue;
            const int t1 = twice_t1 / 2;
            if (t1 < 2 * g_y || t1 > t1_hi) continue;
            p.extended = true;
            p.t1 = t1;
            p.t2 = t2;
            build_script(p);
            out.plan = p;
            return out;
        }
    }
    out.reason = "no (t, t1, t2) within the brackets represents d=" + std::to_string(d);
    return out;
}

std::vector<std::string> plan_invariant_violations(const ConstructionPlan& p) {
    std::vector<std::string> v;
    const auto need = [&](bool ok, const std::string& msg) {
        if (!ok) v.push_back(msg);
    };
    const Frame fr = frame_for(p.g_y, p.g_x);
    need(p.g_y >= 1, "g_y >= 1");
    need(p.g_x >= 37 * p.g_y - 2, "g_x >= 37g_y - 2");
    need(p.parity == fr.parity, "parity case matches b");
    need(p.d0 == fr.d0, "d0 matches b");
    need(p.deg_B1 + p.deg_B2 == fr.b, "deg B1 + deg B2 = b");
    need(p.deg_B1 == p.deg_D + p.deg_Dprime, "deg B1 = deg D + deg D'");
    need(p.deg_B2 == 2 * p.deg_D + p.deg_Dprime, "deg B2 = 2 deg D + deg D'");
    need(p.e_planned == p.deg_B2 - p.deg_B1, "e = deg B2 - deg B1");
    const int want_D = p.parity == Parity::Even ? 2 * p.t : 2 * p.t - 1;
    need(p.deg_D == want_D, "deg D matches t");
    need(p.e_planned == want_D, "e matches t");
    need(2 * p.deg_B1 - p.deg_B2 >= 2 * p.g_y, "deg(2B1 - B2) >= 2g_y");
    need(p.t >= plan_t_floor(p.g_y, p.parity, p.halphen_used), "t above its floor");
    need(p.t <= t_ceiling(p.g_y, p.d0), "t <= (d0 - 2g_y)/3");
    const int direct = direct_degree(p.d0, p.t, p.parity);
    if (p.extended) {
        need(p.target_d == direct + 2 * p.t1 + 3 * p.t2, "d = direct + 2t1 + 3t2");
        need(p.t1 >= 2 * p.g_y, "t1 >= 2g_y");
        need(p.t1 <= 2 * p.deg_B2 - p.deg_B1, "t1 <= 2b2 - b1");
        need(p.t2 >= 0, "t2 >= 0");
    } else {
        need(p.target_d == direct, "d equals the direct degree");
        need(p.t1 == 0 && p.t2 == 0, "direct route has no T1, T2");
    }
    const std::size_t steps = static_cast<std::size_t>(p.deg_D) + (p.extended ? 2u * (p.t1 + p.t2) : 0u);
    need(p.elm_script.size() == steps, "script length matches the plan");
    return v;
}

namespace {

FormalDivisor sum_symbols(const std::string& prefix, int count) {
    FormalDivisor d;
    for (int i = 1; i <= count; ++i) d.add(prefix + std::to_string(i), 1);
    return d;
}

ElmState build_state(const ConstructionPlan& p) {
    ElmState s;
    s.surface = RuledSurfaceModel::tschirnhausen(p.g_y, p.g_x, p.e_planned, Splitting{p.deg_B1, p.deg_B2});

    auto& L = s.ledger;
    L.declare("D", p.deg_D);
    L.declare("D'", p.deg_Dprime);
    L.declare("B1", p.deg_B1);
    L.declare("B2", p.deg_B2);
    const int t3 = p.extended ? p.t1 + p.t2 : 0;
    for (const auto& [prefix, count] : std::vector<std::pair<std::string, int>>{
             {"y", p.deg_D}, {"x", t3}, {"u", p.extended ? p.t1 : 0}, {"v", p.extended ? p.t2 : 0}}) {
        for (int i = 1; i <= count; ++i) L.declare(prefix + std::to_string(i), 1);
    }
    L.relate(FormalDivisor("B1"), FormalDivisor("D") + FormalDivisor("D'"));
    L.relate(FormalDivisor("B2"), 2 * FormalDivisor("D") + FormalDivisor("D'"));
    L.relate(FormalDivisor("D"), sum_symbols("y", p.deg_D));
    if (t3 > 0) L.relate(sum_symbols("x", t3), sum_symbols("u", p.t1) + sum_symbols("v", p.t2));

    const FormalDivisor diff = FormalDivisor("B2") - FormalDivisor("B1");
    TrackedSection S0{"S0", {1, 0, FormalDivisor()}, {}};
    TrackedSection S{"S", {1, p.e_planned, diff}, {}};
    TrackedSection S1{"S1", {1, p.e_planned, diff}, {}};
    TrackedSection S2{"S2", {1, p.e_planned, diff}, {}};
    TrackedTrisection X;
    X.cls = {3, 2 * p.deg_B2 - p.deg_B1, 2 * FormalDivisor("B2") - FormalDivisor("B1")};

    for (int i = 1; i <= p.deg_D; ++i) {
        const std::string y = "y" + std::to_string(i);
        for (auto [pt, sec] : {std::pair{"P", &S}, std::pair{"Q", &S1}, std::pair{"R", &S2}}) {
            const std::string name = pt + std::to_string(i);
            s.point_fibers[name] = y;
            sec->marked_points.insert(name);
            X.smooth_points.insert(name);
        }
    }
    for (int i = 1; i <= t3; ++i) {
        const std::string name = "X" + std::to_string(i);
        s.point_fibers[name] = "x" + std::to_string(i);
        S0.marked_points.insert(name);
    }
    for (int i = 1; p.extended && i <= p.t1; ++i) {
        const std::string name = "U" + std::to_string(i);
        s.point_fibers[name] = "u" + std::to_string(i);
        S.marked_points.insert(name);
        X.smooth_points.insert(name);
    }
    for (int i = 1; p.extended && i <= p.t2; ++i) {
        const std::string name = "V" + std::to_string(i);
        s.point_fibers[name] = "v" + std::to_string(i);
        S.marked_points.insert(name);
    }
    s.sections = {S0, S, S1, S2};
    s.trisection = X;
    s.formal_splitting = FormalSplitting{FormalDivisor("B1"), FormalDivisor("B2"), "S0", "S"};
    return s;
}

}  // namespace

ExecutionReport execute_plan(const ConstructionPlan& p) {
    ExecutionReport rep;
    const auto check = [&](bool ok, const std::string& what) {
        (ok ? rep.checks : rep.failures).push_back(what);
    };

    for (const auto& v : plan_invariant_violations(p)) rep.failures.push_back("plan invariant: " + v);
    if (!rep.failures.empty()) return rep;

    ElmState state;
    try {
        state = build_state(p);
    } catch (const Error& ex) {
        rep.failures.push_back(std::string("initial state: ") + ex.what());
        return rep;
    }
    rep.initial_state = state;

    const int b = state.surface.b;
    check(sections_pairwise_check(state, "S", "S0") == 0, "S.S0 = 0");
    rep.family_intersection = sections_pairwise_check(state, "S1", "S2");
    check(rep.family_intersection == p.deg_D, "S1.S2 = deg E");
    check(arithmetic_genus(state.trisection->cls, state.surface) == p.g_x, "p_a(X) = g_x");
    check(e_bounds_check(state.surface).ok(), "initial surface within the e bounds");

    ElmState cur = state;
    try {
        for (const auto& step : p.elm_script) {
            const OracleReport o = blowup_oracle_check(cur, step);
            if (!o.agree) {
                rep.failures.push_back("oracle disagrees at " + step.center + ": " + o.mismatches.front());
            }
            cur = apply_elm(cur, step);
        }
    } catch (const Error& ex) {
        rep.failures.push_back(std::string("elm script: ") + ex.what());
        return rep;
    }

    const auto& m = cur.surface;
    check(m.e == 0, "final e = 0");
    check(m.splitting && m.splitting->b1 == m.splitting->b2, "final splitting is balanced");
    check(cur.formal_splitting && equivalent(cur.formal_splitting->low, cur.formal_splitting->high, cur.ledger),
          "final splitting summands are linearly equivalent");
    check(cur.trisection->cls.fib_deg == p.target_d, "final trisection fiber degree = d");

    FormalDivisor expected = 2 * FormalDivisor("B2") - FormalDivisor("B1") - sum_symbols("y", p.deg_D);
    if (p.extended) expected += 3 * sum_symbols("x", p.t1 + p.t2) - sum_symbols("u", p.t1);
    check(cur.trisection->cls.fib_formal && *cur.trisection->cls.fib_formal == expected,
          "final class 3S0 + (2B2 - B1 - T - T1 + 3T3)");
    check(arithmetic_genus(cur.trisection->cls, m) - cur.delta_total() == p.g_x,
          "p_a(X') - sum delta = g_x");
    check(cur.delta_total() == 2 * p.target_d - b, "sum delta = 2d - b");

    const int bound = theorem_b_bound(state.surface);
    check(p.target_d >= bound, "d >= (b + e)/2");
    check((p.target_d == bound) == !p.extended, "equality with (b + e)/2 exactly on the direct route");

    rep.final_state = std::move(cur);
    rep.verified = rep.failures.empty();
    return rep;
}

}  // namespace trisect
