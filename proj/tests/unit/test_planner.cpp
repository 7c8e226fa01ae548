#include <doctest.h>

#include "trisect/errors.hpp"
#include "trisect/theorems.hpp"

using namespace trisect;

TEST_CASE("direct plan for g_y = 1, g_x = 35, d = 18") {
    const PlanOutcome o = plan_construction(1, 35, 18, false);
    REQUIRE(o.plan);
    const ConstructionPlan& p = *o.plan;
    CHECK_FALSE(p.extended);
    CHECK(p.t == 1);
    CHECK(p.d0 == 17);
    CHECK(p.deg_D == 2);
    CHECK(p.deg_Dprime == 14);
    CHECK(p.deg_B1 == 16);
    CHECK(p.deg_B2 == 18);
    CHECK(p.e_planned == 2);
    CHECK(plan_invariant_violations(p).empty());
    const ExecutionReport r = execute_plan(p);
    CHECK(r.verified);
    REQUIRE(r.final_state);
    CHECK(r.final_state->surface.e == 0);
    CHECK(r.final_state->trisection->cls.fib_deg == 18);
    CHECK(r.family_intersection == 2);
}

TEST_CASE("degrees below d0 + g_y are out of range") {
    const PlanOutcome o = plan_construction(1, 35, 17, false);
    CHECK_FALSE(o.plan);
    CHECK_FALSE(o.in_range);
}

TEST_CASE("extended plan for d = 26") {
    const PlanOutcome o = plan_construction(1, 35, 26, false);
    REQUIRE(o.plan);
    const ConstructionPlan& p = *o.plan;
    CHECK(p.extended);
    CHECK(p.t == 1);
    CHECK(2 * p.t1 + 3 * p.t2 == 8);
    CHECK(p.t1 >= 2);
    CHECK(p.t1 <= 2 * p.deg_B2 - p.deg_B1);
    const ExecutionReport r = execute_plan(p);
    CHECK(r.verified);
    CHECK(r.final_state->trisection->cls.fib_deg == 26);
}

TEST_CASE("a tampered plan fails") {
    ConstructionPlan p = *plan_construction(1, 35, 18, false).plan;
    p.deg_Dprime -= 1;
    CHECK_FALSE(plan_invariant_violations(p).empty());
    CHECK_FALSE(execute_plan(p).verified);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(plan_construction(0, 10, 5, false), PreconditionFailed);
    CHECK_THROWS_AS(plan_construction(1, 34, 18, false), PreconditionFailed);
    CHECK_THROWS_AS(plan_construction(1, 35, 18, true), PreconditionFailed);
}

TEST_CASE("sharper floor for t") {
    CHECK(plan_t_floor(5, Parity::Even, true) == 4);
    CHECK(plan_t_floor(5, Parity::Even, false) == 5);
    CHECK_FALSE(plan_construction(5, 183, 89, false).plan);
    const PlanOutcome o = plan_construction(5, 183, 89, true);
    REQUIRE(o.plan);
    CHECK(o.plan->halphen_used);
    CHECK(o.plan->t == 4);
    CHECK(execute_plan(*o.plan).verified);
}

TEST_CASE("odd parity") {
    // b = 35, d0 = 18, e = 2t - 1.
    const PlanOutcome o = plan_construction(1, 36, 19, false);
    REQUIRE(o.plan);
    const ConstructionPlan& p = *o.plan;
    CHECK(p.parity == Parity::Odd);
    CHECK(p.d0 == 18);
    CHECK(p.t == 2);
    CHECK(p.deg_D == 3);
    CHECK(p.e_planned == 3);
    CHECK(p.deg_B1 + p.deg_B2 == 35);
    CHECK(execute_plan(p).verified);
    for (int d = 19; d <= 40; ++d) {
        const PlanOutcome q = plan_construction(1, 36, d, false);
        REQUIRE(q.plan);
        const ExecutionReport r = execute_plan(*q.plan);
        CHECK(r.verified);
        CHECK(r.final_state->trisection->cls.fib_deg == d);
    }
}

TEST_CASE("every returned plan meets the lower bound, with equality only on the minimal direct route") {
    for (int d = 18; d <= 40; ++d) {
        const PlanOutcome o = plan_construction(1, 35, d, false);
        REQUIRE(o.plan);
        const ExecutionReport r = execute_plan(*o.plan);
        REQUIRE(r.initial_state);
        const int bound = theorem_b_bound(r.initial_state->surface);
        CHECK(d >= bound);
        CHECK((d == bound) == !o.plan->extended);
    }
}
