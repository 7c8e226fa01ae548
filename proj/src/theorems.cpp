#include "trisect/theorems.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "trisect/errors.hpp"

namespace trisect {

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::MustFactor: return "MustFactor";
        case Verdict::Impossible: return "Impossible";
        case Verdict::MinimalRequiresDecomposable: return "MinimalRequiresDecomposable";
        case Verdict::Guaranteed: return "Guaranteed";
        case Verdict::Unknown: break;
    }
    return "Unknown";
}

const char* to_string(LinearSeriesGeometry g) {
    return g == LinearSeriesGeometry::VeryAmple ? "VeryAmple" : "SeparatesFibers";
}

const char* to_string(RangeTag t) {
    switch (t) {
        case RangeTag::Construction: return "Construction";
        case RangeTag::BrillNoetherExtension: return "BN-extension";
        case RangeTag::Nonspecial: break;
    }
    return "Nonspecial";
}

bool is_prime(int k) {
    if (k < 2) return false;
    for (int p = 2; p * p <= k; ++p)
        if (k % p == 0) return false;
    return true;
}

namespace {

Rational cs_threshold(int g_x, int g_y, int k) {
    long long num = g_x - static_cast<long long>(k) * g_y + k - 1;
    long long den = k - 1;
    const long long g = std::gcd(std::llabs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

}  // namespace

MorphismVerdict cs_classical(int g_x, int g_y, int k, int d) {
    if (!is_prime(k)) throw NonPrimeK(std::to_string(k) + " is not prime");
    MorphismVerdict v;
    v.thresholds.cs = cs_threshold(g_x, g_y, k);
    const long long lhs = static_cast<long long>(d) * (k - 1);
    const long long rhs = g_x - static_cast<long long>(k) * g_y + k - 1;
    if (lhs < rhs) {
        v.verdict = Verdict::MustFactor;
        v.reason = "d < " + v.thresholds.cs->to_string();
    } else {
        v.verdict = Verdict::Unknown;
        v.reason = "d >= " + v.thresholds.cs->to_string();
    }
    return v;
}

int theorem_b_bound(const RuledSurfaceModel& m) {
    return (m.b + std::abs(m.e)) / 2;
}

std::optional<int> theorem_a_threshold(const RuledSurfaceModel& m) {
    if (m.g_x < 9 * m.g_y + 4) return std::nullopt;
    return theorem_b_bound(m) + 4 * m.g_y;
}

MorphismVerdict verdict(const RuledSurfaceModel& m, int d) {
    MorphismVerdict v;
    v.thresholds.cs = cs_threshold(m.g_x, m.g_y, 3);
    v.thresholds.theorem_b = theorem_b_bound(m);
    v.thresholds.theorem_a = theorem_a_threshold(m);
    const int bound = *v.thresholds.theorem_b;

    if (d < bound) {
        v.verdict = Verdict::Impossible;
        v.reason = "d < (b + |e|)/2 = " + std::to_string(bound);
    } else if (d == bound) {
        if (m.decomposability == Decomposability::Indecomposable) {
            v.verdict = Verdict::Impossible;
            v.reason = "d = (b + |e|)/2 requires a decomposable Tschirnhausen module";
        } else if (m.e < 0) {
            v.verdict = Verdict::Unknown;
            v.reason = "d = (b + |e|)/2 with e < 0 is not settled";
        } else {
            v.verdict = Verdict::MinimalRequiresDecomposable;
            v.reason = "d = (b + e)/2 forces a decomposable Tschirnhausen module";
        }
    } else if (v.thresholds.theorem_a && d >= *v.thresholds.theorem_a) {
        v.verdict = Verdict::Guaranteed;
        v.reason = "d >= (b + |e|)/2 + 4g_y = " + std::to_string(*v.thresholds.theorem_a);
    } else {
        v.verdict = Verdict::Unknown;
        v.reason = "between the lower bound and the existence threshold";
    }
    return v;
}

H0Chain h0_chain(const RuledSurfaceModel& m, int a) {
    if (m.g_x < 9 * m.g_y + 4) throw PreconditionFailed("h0 chain needs g_x >= 9g_y + 4");
    const int mi = m_invariant(m);
    if (a < 2 * m.g_y - 1 || a > mi) {
        throw OutOfWindow("a=" + std::to_string(a) + " outside [" + std::to_string(2 * m.g_y - 1) +
                          ", " + std::to_string(mi) + "]");
    }
    H0Chain h;
    h.a = a;

    // Surface route: h^0 of E0 (N + K_Y - A), rank 2, by Riemann-Roch on Y,
    // plus the h^1 term, which is h^0 of E0 (-B + N + A) and vanishes.
    h.vanishing_degree = -m.b + m.n + a;
    if (h.vanishing_degree >= 0) throw PreconditionFailed("deg(-B + N + A) is not negative");
    const int deg_bundle = -m.e + 2 * (m.n + 2 * m.g_y - 2 - a);
    h.h0_surface = deg_bundle + 2 * (1 - m.g_y);

    // Curve route: h^0(X, f^*A) = h^0(Y, A) + h^0(Y, E^v(A)), then Riemann-Roch on X.
    const H0Value hA = h0_line_bundle(m.g_y, a, false);
    if (!hA.exact()) throw PreconditionFailed("h0(Y, A) is not determined by the degree");
    h.h0_fA = hA.lo;
    const int deg_fA = 3 * a;
    h.h0_KX_fA = h.h0_fA - deg_fA + m.g_x - 1;

    const SurfaceClass K = canonical_class(m);
    const SurfaceClass X = trisection_cover_class(m);
    const SurfaceClass C{K.sigma + X.sigma, K.fib_deg + X.fib_deg - a, std::nullopt};
    h.cut_out_margin = intersect(C, X, m) - intersect(C, C, m);
    h.cut_out = h.cut_out_margin > 0;
    h.geometry = a <= mi - 1 ? LinearSeriesGeometry::VeryAmple : LinearSeriesGeometry::SeparatesFibers;
    return h;
}

bool PencilRanges::contains(int d) const {
    for (const auto& r : ranges)
        if (d >= r.lo && (!r.hi || d <= *r.hi)) return true;
    return false;
}

PencilRanges pencil_degree_range(const RuledSurfaceModel& m) {
    const auto thr = theorem_a_threshold(m);
    if (!thr) throw PreconditionFailed("pencil ranges need g_x >= 9g_y + 4");
    PencilRanges pr;
    pr.threshold = *thr;
    const int a_lo = std::max(0, 2 * m.g_y - 1);
    const int a_hi = m_invariant(m);
    pr.construction_min = m.g_x + m.g_y - a_hi;
    pr.construction_max = m.g_x + m.g_y - a_lo;
    if (a_lo <= a_hi) pr.ranges.push_back({RangeTag::Construction, pr.construction_min, pr.construction_max});
    if (m.g_x - m.g_y + 2 <= m.g_x) {
        pr.ranges.push_back({RangeTag::BrillNoetherExtension, m.g_x - m.g_y + 2, m.g_x});
    }
    pr.ranges.push_back({RangeTag::Nonspecial, m.g_x + 1, std::nullopt});
    for (int d = pr.threshold; d <= m.g_x + 1; ++d)
        if (!pr.contains(d)) pr.gaps.push_back(d);
    return pr;
}

GonalityConsequence gonality_consequence(int g_x, int g_y, int k) {
    if (!is_prime(k)) throw NonPrimeK(std::to_string(k) + " is not prime");
    GonalityConsequence g;
    g.cs_threshold = cs_threshold(g_x, g_y, k);
    g.k_times_gy_plus_one = k * (g_y + 1);
    if (g_x >= k * k * g_y + (k - 1) * (k - 1)) {
        g.applies = g.cs_threshold.num >= static_cast<long long>(g.k_times_gy_plus_one) * g.cs_threshold.den;
        g.conclusion = g.applies ? "gon(X) = " + std::to_string(k) + " * gon(Y)"
                                 : "threshold inequality failed";
    } else {
        g.conclusion = "Unknown";
    }
    return g;
}

CharacterizationReport minimal_degree_characterization(const ElmState& state) {
    CharacterizationReport rep;
    const auto& m = state.surface;
    if (!m.splitting) throw PreconditionFailed("surface must carry a splitting");
    if (m.e < 0) throw PreconditionFailed("e must be non-negative");
    if (m.e == 0) {
        rep.consistent = true;
        rep.final_trivial = true;
        rep.relation_holds = true;
        rep.final_state = state;
        return rep;
    }
    if (!state.formal_splitting) throw PreconditionFailed("a formal splitting B1, B2 is required");
    if (!state.trisection) throw PreconditionFailed("a trisection is required");

    const TrackedSection* S = nullptr;
    if (const auto* hs = state.section(state.formal_splitting->high_section)) S = hs;
    if (!S) {
        for (const auto& sec : state.sections)
            if (sec.cls.fib_deg == m.e) S = &sec;
    }
    if (!S || S->cls.fib_deg != m.e) throw PreconditionFailed("no tracked section disjoint from S0");
    std::vector<std::string> qs;
    for (const auto& q : S->marked_points)
        if (state.trisection->smooth_points.count(q)) qs.push_back(q);
    if (static_cast<int>(qs.size()) != m.e) {
        throw PreconditionFailed("section " + S->id + " carries " + std::to_string(qs.size()) +
                                 " trisection points, expected e = " + std::to_string(m.e));
    }

    FormalDivisor sum_q;
    std::set<std::string> fibers;
    for (const auto& q : qs) {
        const auto it = state.point_fibers.find(q);
        if (it == state.point_fibers.end()) throw PreconditionFailed("point " + q + " has no fiber");
        if (!fibers.insert(it->second).second) throw PreconditionFailed("points share a fiber");
        sum_q += FormalDivisor(it->second);
    }
    const auto& fs = *state.formal_splitting;
    ElmState cur = state;
    for (const auto& q : qs) {
        ElmStep step;
        step.center = q;
        step.fiber = state.point_fibers.at(q);
        step.on_min_section = false;
        for (const auto& sec : cur.sections)
            if (sec.marked_points.count(q)) step.on_sections.insert(sec.id);
        step.trisection_multiplicity = 1;
        cur = apply_elm(cur, step);
        rep.script.push_back(step);
    }
    rep.final_e = cur.surface.e;
    rep.relation_holds = equivalent(sum_q, fs.high - fs.low, state.ledger);

    if (cur.surface.e != 0) rep.issues.push_back("final e is " + std::to_string(cur.surface.e));
    if (!cur.surface.splitting) {
        rep.issues.push_back("splitting lost during the transformation");
    } else if (cur.surface.splitting->b1 != cur.surface.splitting->b2) {
        rep.issues.push_back("final splitting degrees differ");
    }
    if (!cur.formal_splitting) {
        rep.issues.push_back("formal splitting lost");
    } else {
        const auto& f = *cur.formal_splitting;
        // Up to the twist by sum(q), the result must be O(B1 + sum q) + O(B2).
        const FormalDivisor expected = fs.high - fs.low - sum_q;
        const FormalDivisor got = f.high - f.low;
        if (!(got == expected || got == -expected)) rep.issues.push_back("formal splitting drifted");
        rep.final_trivial = equivalent(f.low, f.high, cur.ledger);
    }
    if (rep.final_trivial != rep.relation_holds) {
        rep.issues.push_back("triviality of the result disagrees with the relation test");
    }
    rep.consistent = rep.issues.empty();
    rep.final_state = std::move(cur);
    return rep;
}

}  // namespace trisect
