#include <doctest.h>

#include "trisect/errors.hpp"
#include "trisect/scenario.hpp"
#include "trisect/theorems.hpp"

using namespace trisect;

TEST_CASE("classical factoring gate") {
    CHECK(cs_classical(13, 1, 3, 5).verdict == Verdict::MustFactor);
    CHECK(cs_classical(13, 1, 3, 5).thresholds.cs == Rational{6, 1});
    CHECK(cs_classical(13, 1, 3, 6).verdict == Verdict::Unknown);
    const auto t = cs_classical(5, 0, 3, 3);
    CHECK(t.verdict == Verdict::MustFactor);
    CHECK(t.thresholds.cs == Rational{7, 2});
    CHECK_THROWS_AS(cs_classical(13, 1, 4, 5), NonPrimeK);
}

TEST_CASE("lower bound and existence threshold") {
    const auto trig = RuledSurfaceModel::tschirnhausen(0, 5, 1);
    CHECK(theorem_b_bound(trig) == 4);
    CHECK(trig.g_x - m_invariant(trig) == 4);
    CHECK(theorem_b_bound(RuledSurfaceModel::from_bundle(1, 12, 0)) == 6);
    CHECK(theorem_b_bound(RuledSurfaceModel::from_bundle(1, 34, 2)) == 18);
    CHECK(theorem_a_threshold(RuledSurfaceModel::tschirnhausen(1, 13, 0)) == 10);
    CHECK_FALSE(theorem_a_threshold(RuledSurfaceModel::tschirnhausen(1, 12, 1)).has_value());
    CHECK(theorem_a_threshold(trig) == 4);
}

TEST_CASE("verdicts") {
    auto indec = RuledSurfaceModel::tschirnhausen(1, 13, 2);
    indec.decomposability = Decomposability::Indecomposable;
    CHECK(verdict(indec, 7).verdict == Verdict::Impossible);
    const auto split = RuledSurfaceModel::tschirnhausen(1, 13, 2, Splitting{5, 7});
    CHECK(verdict(split, 7).verdict == Verdict::MinimalRequiresDecomposable);
    CHECK(verdict(split, 6).verdict == Verdict::Impossible);
    CHECK(verdict(RuledSurfaceModel::tschirnhausen(1, 13, 0), 10).verdict == Verdict::Guaranteed);
    CHECK(verdict(RuledSurfaceModel::tschirnhausen(1, 13, 0), 8).verdict == Verdict::Unknown);
    CHECK(verdict(RuledSurfaceModel::tschirnhausen(1, 13, -2), 7).verdict == Verdict::Unknown);
}

TEST_CASE("h0 chain") {
    const auto m = RuledSurfaceModel::tschirnhausen(1, 13, 0);
    CHECK(m_invariant(m) == 4);
    const H0Chain h = h0_chain(m, 2);
    CHECK(h.h0_KX_fA == 8);
    CHECK(h.h0_surface == 8);
    CHECK(h.h0_fA == 2);
    CHECK(h.cut_out);
    CHECK(h.geometry == LinearSeriesGeometry::VeryAmple);
    CHECK(h0_chain(m, 4).geometry == LinearSeriesGeometry::SeparatesFibers);
    CHECK_THROWS_AS(h0_chain(m, 5), OutOfWindow);
    CHECK_THROWS_AS(h0_chain(m, 0), OutOfWindow);
    CHECK_THROWS_AS(h0_chain(RuledSurfaceModel::tschirnhausen(1, 12, 1), 1), PreconditionFailed);
}

TEST_CASE("pencil degree ranges") {
    const auto a = pencil_degree_range(RuledSurfaceModel::tschirnhausen(1, 13, 0));
    CHECK(a.threshold == 10);
    CHECK(a.construction_min == 10);
    CHECK(a.construction_max == 13);
    CHECK(a.gaps.empty());
    const auto b = pencil_degree_range(RuledSurfaceModel::tschirnhausen(0, 5, 1, Splitting{3, 4}));
    CHECK(b.threshold == 4);
    for (int d = 4; d <= 30; ++d) CHECK(b.contains(d));
    // b = 18 here, so the threshold is 9 + 8 = 17 and m = 7.
    const auto c = pencil_degree_range(RuledSurfaceModel::tschirnhausen(2, 22, 0));
    CHECK(c.threshold == 17);
    CHECK(c.construction_min == 17);
    CHECK(c.construction_max == 21);
    CHECK(c.gaps.empty());
    CHECK_THROWS_AS(pencil_degree_range(RuledSurfaceModel::tschirnhausen(1, 12, 1)), PreconditionFailed);
}

TEST_CASE("gonality consequence") {
    const auto a = gonality_consequence(13, 1, 3);
    CHECK(a.applies);
    CHECK(a.conclusion == "gon(X) = 3 * gon(Y)");
    CHECK(gonality_consequence(12, 1, 3).conclusion == "Unknown");
    CHECK(gonality_consequence(4, 0, 2).applies);
    CHECK_THROWS_AS(gonality_consequence(13, 1, 6), NonPrimeK);
}

TEST_CASE("minimal degree characterization") {
    const Scenario with = load_scenario_file(std::string(TRISECT_SCENARIO_DIR) + "/minimal_degree_relation.json");
    const auto r = minimal_degree_characterization(with.initial);
    CHECK(r.consistent);
    CHECK(r.relation_holds);
    CHECK(r.final_trivial);
    CHECK(r.final_e == 0);
    CHECK(r.script.size() == 2);

    const Scenario without = load_scenario_file(std::string(TRISECT_SCENARIO_DIR) + "/minimal_degree_no_relation.json");
    const auto n = minimal_degree_characterization(without.initial);
    CHECK(n.consistent);
    CHECK_FALSE(n.relation_holds);
    CHECK_FALSE(n.final_trivial);
    CHECK(n.final_e == 0);

    ElmState flat;
    flat.surface = RuledSurfaceModel::tschirnhausen(1, 35, 0, Splitting{17, 17});
    const auto v = minimal_degree_characterization(flat);
    CHECK(v.consistent);
    CHECK(v.script.empty());

    ElmState nosplit;
    nosplit.surface = RuledSurfaceModel::tschirnhausen(1, 35, 0);
    CHECK_THROWS_AS(minimal_degree_characterization(nosplit), PreconditionFailed);
}
