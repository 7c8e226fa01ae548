#include <doctest.h>

#include <algorithm>
#include <random>

#include "trisect/elm.hpp"
#include "trisect/errors.hpp"
#include "trisect/verify.hpp"

using namespace trisect;

namespace {

ElmStep step(const std::string& center, const std::string& fiber, bool on_min, std::set<std::string> on, int r) {
    ElmStep s;
    s.center = center;
    s.fiber = fiber;
    s.on_min_section = on_min;
    s.on_sections = std::move(on);
    s.trisection_multiplicity = r;
    return s;
}

ElmState product_state(int g_y, int fib_deg) {
    ElmState s;
    s.surface = RuledSurfaceModel::product(g_y);
    s.sections.push_back({"S0", SurfaceClass::min_section(), {}});
    s.trisection = TrackedTrisection{{3, fib_deg, std::nullopt}, {}, {}};
    return s;
}

ElmState split_state() {
    ElmState s;
    s.surface = RuledSurfaceModel::tschirnhausen(1, 35, 2, Splitting{16, 18});
    s.ledger.declare("B1", 16);
    s.ledger.declare("B2", 18);
    s.sections.push_back({"S0", {1, 0, FormalDivisor()}, {}});
    s.sections.push_back({"S", {1, 2, FormalDivisor("B2") - FormalDivisor("B1")}, {}});
    s.sections.push_back({"T", {1, 4, std::nullopt}, {}});
    s.formal_splitting = FormalSplitting{FormalDivisor("B1"), FormalDivisor("B2"), "S0", "S"};
    s.trisection = TrackedTrisection{{3, 20, std::nullopt}, {}, {}};
    return s;
}

}  // namespace

TEST_CASE("e moves by one in the direction set by the minimal section") {
    const ElmState s = product_state(1, 5);
    const ElmState off = apply_elm(s, step("P", "p", false, {}, 0));
    CHECK(off.surface.e == -1);
    CHECK(off.surface.b == -1);
    CHECK(off.surface.raw);
    const ElmState on = apply_elm(s, step("P", "p", true, {"S0"}, 0));
    CHECK(on.surface.e == 1);
    CHECK(on.surface.e == 2 * on.surface.n - on.surface.b);
}

TEST_CASE("trisection class updates for the four center positions") {
    const ElmState s = product_state(1, 5);
    CHECK(apply_elm(s, step("P", "p", true, {"S0"}, 0)).trisection->cls.fib_deg == 8);
    CHECK(apply_elm(s, step("P", "p", true, {"S0"}, 1)).trisection->cls.fib_deg == 7);
    CHECK(apply_elm(s, step("P", "p", false, {}, 0)).trisection->cls.fib_deg == 5);
    CHECK(apply_elm(s, step("P", "p", false, {}, 1)).trisection->cls.fib_deg == 4);
}

TEST_CASE("sections through the center and away from it") {
    ElmState s = split_state();
    s.point_fibers["Q"] = "q";
    s.sections[1].marked_points.insert("Q");
    const ElmState a = apply_elm(s, step("Q", "q", false, {"S"}, 0));
    CHECK(a.sections[1].cls.fib_deg == 1);
    CHECK(a.sections[2].cls.fib_deg == 4);
    CHECK(a.sections[0].cls.fib_deg == 0);
    CHECK(a.sections[1].cls.fib_formal == FormalDivisor("B2") - FormalDivisor("B1") - FormalDivisor("q"));
    CHECK(a.surface.splitting == Splitting{16, 17});
    CHECK(a.formal_splitting->high == FormalDivisor("B2") - FormalDivisor("q"));
    // The image point lies on every section that missed the center.
    const std::string img = a.history.back().image_point;
    CHECK(a.sections[0].marked_points.count(img) == 1);
    CHECK(a.sections[2].marked_points.count(img) == 1);
    CHECK(a.sections[1].marked_points.count(img) == 0);
}

TEST_CASE("a step on the minimal section lowers b1") {
    const ElmState a = apply_elm(split_state(), step("P", "p", true, {"S0"}, 0));
    CHECK(a.surface.e == 3);
    CHECK(a.surface.splitting == Splitting{15, 18});
    CHECK(a.formal_splitting->low == FormalDivisor("B1") - FormalDivisor("p"));
}

TEST_CASE("a double point chain loses one unit of delta per step") {
    ElmState s = product_state(0, 6);
    s.point_fibers["P"] = "p";
    s.sections[0].marked_points.insert("P");
    s.trisection->singularities.push_back({"P", "p", {2, 2, 2}, {{"S0"}, {"S0"}, {"S0"}}});
    CHECK(s.delta_total() == 3);
    const ElmState a = apply_elm(s, step("P", "p", true, {"S0"}, 2));
    REQUIRE(a.trisection->profile_at("P") != nullptr);
    CHECK(a.trisection->profile_at("P")->chain == std::vector<int>{2, 2});
    CHECK(a.delta_total() == 2);
    CHECK(a.trisection->cls.fib_deg == 7);
    CHECK(a.trisection->smooth_points.count(a.history.back().image_point) == 1);
    CHECK(blowup_oracle_check(s, step("P", "p", true, {"S0"}, 2)).agree);
}

TEST_CASE("a triple point loses three units of delta") {
    ElmState s = product_state(1, 6);
    s.point_fibers["P"] = "p";
    s.trisection->singularities.push_back({"P", "p", {3}, {}});
    const ElmState a = apply_elm(s, step("P", "p", false, {}, 3));
    CHECK(a.delta_total() == 0);
    CHECK(a.trisection->cls.fib_deg == 3);
    const auto& notes = a.history.back().notes;
    CHECK(std::count_if(notes.begin(), notes.end(),
                        [](const std::string& n) { return n.find("exhausted") != std::string::npos; }) == 1);
}

TEST_CASE("steps inconsistent with the singularity ledger are rejected") {
    ElmState s = product_state(1, 6);
    s.point_fibers["P"] = "p";
    s.trisection->singularities.push_back({"P", "p", {2}, {}});
    CHECK_THROWS_AS(apply_elm(s, step("P", "p", false, {}, 1)), ProfileMismatch);
    CHECK_THROWS_AS(apply_elm(s, step("R", "r", false, {}, 2)), ProfileMismatch);
    CHECK_THROWS_AS(apply_elm(s, step("R", "r", false, {}, 4)), InvalidStep);
    CHECK_THROWS_AS(apply_elm(s, step("P", "q", false, {}, 2)), InvalidStep);
    CHECK_THROWS_AS(apply_elm(s, step("R", "r", false, {"S9"}, 0)), InvalidStep);
    CHECK_THROWS_AS(apply_elm(s, step("R", "r", false, {"S0"}, 0)), InvalidStep);
    const ElmState a = apply_elm(s, step("R", "r", false, {}, 0));
    CHECK_THROWS_AS(apply_elm(a, step("U", "r", false, {}, 0)), InvalidStep);
}

TEST_CASE("inverse restores the previous state") {
    const ElmState s = product_state(1, 5);
    const ElmState a = apply_elm(s, step("P", "p", true, {"S0"}, 0));
    CHECK(a.trisection->cls.fib_deg == 8);
    const ElmState back = apply_inverse(a);
    CHECK(back.surface.e == 0);
    CHECK(back.trisection->cls.fib_deg == 5);
    CHECK(back == s);
    CHECK_THROWS_AS(apply_inverse(s), EmptyHistory);
    const ElmStep inv = inverse_step(a, a.history.back());
    CHECK(inv.trisection_multiplicity == 3);
    CHECK_FALSE(inv.on_min_section);
}

TEST_CASE("inverse law on random states") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const RandomElmCase rc = random_elm_case(rng, i % 8);
        CHECK(apply_inverse(apply_elm(rc.state, rc.step)) == rc.state);
    }
}

TEST_CASE("lattice oracle agrees on the displayed cases and on random ones") {
    const ElmState s = product_state(1, 5);
    const auto off = blowup_oracle_check(s, step("P", "p", false, {}, 0));
    CHECK(off.agree);
    CHECK(off.trisection_fib_deg == 5);
    const auto on = blowup_oracle_check(s, step("P", "p", true, {"S0"}, 1));
    CHECK(on.agree);
    CHECK(on.trisection_fib_deg == 7);
    CHECK(on.multiplicity_at_image == 2);
    std::mt19937_64 rng(5);
    int agree = 0;
    for (int i = 0; i < 200; ++i) {
        const RandomElmCase rc = random_elm_case(rng, i % 8);
        agree += blowup_oracle_check(rc.state, rc.step).agree ? 1 : 0;
    }
    CHECK(agree == 200);
    const auto bad = blowup_oracle_check(s, step("P", "p", false, {}, 2));
    CHECK_FALSE(bad.agree);
}

TEST_CASE("resolution") {
    SUBCASE("nothing to resolve") {
        const auto r = resolve_singularities(product_state(1, 4), ResolveStrategy::Exhaustive);
        CHECK(r.alpha == 0);
        CHECK(r.steps.empty());
        CHECK(r.resolved);
    }
    SUBCASE("a single node") {
        ElmState s = product_state(1, 4);
        s.point_fibers["P"] = "p";
        s.trisection->singularities.push_back({"P", "p", {2}, {}});
        const auto r = resolve_singularities(s, ResolveStrategy::Exhaustive);
        CHECK(r.alpha == 1);
        CHECK(r.final_state.delta_total() == 0);
    }
    SUBCASE("nodes on the minimal section of a product") {
        for (int e = 1; e <= 3; ++e) {
            const ElmState s = minimal_degree_shape(1, e, 2 * e + 3);
            const auto x = resolve_singularities(s, ResolveStrategy::Exhaustive);
            CHECK(x.alpha == e);
            CHECK(x.all_raising_minimal);
            CHECK(x.final_state.surface.e == e);
            const auto g = resolve_singularities(s, ResolveStrategy::Greedy);
            CHECK(g.alpha <= s.delta_total());
        }
    }
    SUBCASE("budget") {
        const ElmState s = minimal_degree_shape(1, 3, 9);
        CHECK_THROWS_AS(resolve_singularities(s, ResolveStrategy::Exhaustive, 2), BudgetExceeded);
    }
}

TEST_CASE("pairwise section intersections") {
    ElmState s = split_state();
    CHECK(sections_pairwise_check(s, "S0", "S") == 0);
    CHECK(sections_pairwise_check(s, "S", "S") == 2);
    CHECK(sections_pairwise_check(s, "S0", "S0") == -2);
    CHECK_THROWS_AS(sections_pairwise_check(s, "S0", "nope"), UnknownSection);
}
