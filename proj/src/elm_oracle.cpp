// Independent recomputation of an elementary transformation inside the
// Picard lattice of the blow-up at the center: basis (s, f, x) for the pulled
// back section, the pulled back fiber and the exceptional curve.

#include <string>

#include "trisect/elm.hpp"
#include "trisect/errors.hpp"

namespace trisect {

namespace {

struct Vec {
    long long s = 0, f = 0, x = 0;
};

Vec operator+(Vec a, Vec b) { return {a.s + b.s, a.f + b.f, a.x + b.x}; }
Vec operator-(Vec a, Vec b) { return {a.s - b.s, a.f - b.f, a.x - b.x}; }
Vec operator*(long long k, Vec a) { return {k * a.s, k * a.f, k * a.x}; }

struct Lattice {
    long long e;
    long long dot(Vec a, Vec b) const { return -e * a.s * b.s + a.s * b.f + a.f * b.s - a.x * b.x; }
};

struct Pushed {
    long long alpha, beta, mult_at_image;
    Vec pullback;
};

}  // namespace

OracleReport blowup_oracle_check(const ElmState& state, const ElmStep& step) {
    OracleReport rep;
    ElmState after;
    try {
        after = apply_elm(state, step);
    } catch (const Error& ex) {
        rep.agree = false;
        rep.mismatches.push_back(std::string("engine rejected the step: ") + ex.what());
        return rep;
    }

    const Lattice L{state.surface.e};
    const Vec f_hat{0, 1, 0};
    const Vec exc{0, 0, 1};
    const Vec f_strict = f_hat - exc;
    const long long m0 = step.on_min_section ? 1 : 0;
    const Vec s0_strict{1, 0, -m0};
    const Vec s0_new = s0_strict + L.dot(s0_strict, f_strict) * f_strict;
    const long long e_new = -L.dot(s0_new, s0_new);

    const auto push = [&](long long a, long long z, long long mu) {
        const Vec strict{a, z, -mu};
        const long long meet = L.dot(strict, f_strict);
        const Vec pb = strict + meet * f_strict;
        const long long alpha = L.dot(pb, f_hat);
        const long long beta = L.dot(pb, s0_new) + e_new * alpha;
        return Pushed{alpha, beta, meet, pb};
    };

    const auto note = [&](const std::string& what, long long want, long long got) {
        if (want != got) {
            rep.agree = false;
            rep.mismatches.push_back(what + ": lattice " + std::to_string(want) + ", engine " +
                                     std::to_string(got));
        }
    };

    rep.e_after = static_cast<int>(e_new);
    note("e-invariant", e_new, after.surface.e);
    const std::string image = after.history.back().image_point;

    for (std::size_t i = 0; i < state.sections.size(); ++i) {
        const auto& before = state.sections[i];
        const auto& now = after.sections[i];
        const long long mu = step.on_sections.count(before.id) ? 1 : 0;
        const Pushed p = push(before.cls.sigma, before.cls.fib_deg, mu);
        note("section " + before.id + " sigma", p.alpha, now.cls.sigma);
        note("section " + before.id + " fiber degree", p.beta, now.cls.fib_deg);
        note("section " + before.id + " through image point", p.mult_at_image,
             now.marked_points.count(image) ? 1 : 0);
    }

    if (state.trisection) {
        const auto& tb = *state.trisection;
        const auto& ta = *after.trisection;
        const Pushed p = push(tb.cls.sigma, tb.cls.fib_deg, step.trisection_multiplicity);
        note("trisection sigma", p.alpha, ta.cls.sigma);
        note("trisection fiber degree", p.beta, ta.cls.fib_deg);
        rep.trisection_fib_deg = static_cast<int>(p.beta);

        int engine_mult = 0;
        if (const auto* prof = ta.profile_at(image)) engine_mult = prof->multiplicity();
        else if (ta.smooth_points.count(image)) engine_mult = 1;
        note("multiplicity at image point", p.mult_at_image, engine_mult);
        rep.multiplicity_at_image = static_cast<int>(p.mult_at_image);

        // Canonical classes: K on the old surface, K' pulled back to the blow-up.
        const long long k_fib = -state.surface.e + 2LL * state.surface.g_y - 2;
        const Vec k_old{-2, k_fib, 0};
        const Vec k_blow = k_old + exc;
        const Vec k_new = k_blow - f_strict;
        const Vec c_old{tb.cls.sigma, tb.cls.fib_deg, 0};
        const long long twice_old = L.dot(c_old, c_old) + L.dot(c_old, k_old);
        const long long twice_new = L.dot(p.pullback, p.pullback) + L.dot(p.pullback, k_new);
        if (twice_old % 2 != 0 || twice_new % 2 != 0) {
            rep.agree = false;
            rep.mismatches.push_back("adjunction parity failure in the lattice");
        }
        const long long dpa = (twice_new - twice_old) / 2;
        rep.genus_change = static_cast<int>(dpa);
        note("arithmetic genus change vs delta ledger change", dpa,
             ta.delta_total() - tb.delta_total());
    }
    return rep;
}

}  // namespace trisect
