#include <doctest.h>

#include "trisect/errors.hpp"
#include "trisect/ruled.hpp"

using namespace trisect;

namespace {

RuledSurfaceModel bundle(int g_y, int b, int n) { return RuledSurfaceModel::from_bundle(g_y, b, 2 * n - b); }

}  // namespace

TEST_CASE("intersection form") {
    const auto m = bundle(1, 9, 5);  // e = 1
    const SurfaceClass s0 = SurfaceClass::min_section();
    CHECK(intersect(s0, s0, m) == -1);
    CHECK(intersect(s0, SurfaceClass::fiber(), m) == 1);
    CHECK(intersect({3, 6, std::nullopt}, {-2, -1, std::nullopt}, m) == -9);
}

TEST_CASE("canonical class") {
    const auto a = canonical_class(bundle(0, 7, 4));
    CHECK(a.sigma == -2);
    CHECK(a.fib_deg == -3);
    CHECK(canonical_class(bundle(1, 9, 5)).fib_deg == -1);
    const auto p = canonical_class(RuledSurfaceModel::product(1));
    CHECK(p.sigma == -2);
    CHECK(p.fib_deg == 0);
}

TEST_CASE("trisection class") {
    CHECK(trisection_cover_class(bundle(1, 9, 5)).fib_deg == 6);
    CHECK(trisection_cover_class(bundle(1, 12, 6)).fib_deg == 6);
    const auto c = trisection_cover_class(bundle(0, 7, 4));
    CHECK(c.sigma == 3);
    CHECK(c.fib_deg == 5);
}

TEST_CASE("arithmetic genus by adjunction") {
    const auto m = bundle(1, 9, 5);
    CHECK(arithmetic_genus(trisection_cover_class(m), m) == 10);
    CHECK(arithmetic_genus({3, 10, std::nullopt}, RuledSurfaceModel::product(1)) == 21);
    for (int g_y = 0; g_y <= 4; ++g_y) {
        for (int e : {-1, 0, 1, 2}) {
            const auto mm = RuledSurfaceModel::from_bundle(g_y, 10 + e, e);
            CHECK(arithmetic_genus(SurfaceClass::min_section(), mm) == g_y);
        }
    }
}

TEST_CASE("tschirnhausen model relations") {
    const auto m = RuledSurfaceModel::tschirnhausen(1, 35, 2, Splitting{16, 18});
    CHECK(m.b == 34);
    CHECK(m.n == 18);
    CHECK(m.invariant_violations().empty());
    CHECK_THROWS_AS(RuledSurfaceModel::tschirnhausen(1, 13, 1), ParityError);
    auto bad = m;
    bad.splitting = Splitting{15, 19};
    CHECK_FALSE(bad.invariant_violations().empty());
}

TEST_CASE("M-invariant") {
    CHECK(m_invariant(RuledSurfaceModel::tschirnhausen(0, 5, 1)) == 1);
    CHECK(m_invariant(RuledSurfaceModel::from_bundle(1, 12, 0)) == 4);
    CHECK(m_invariant(RuledSurfaceModel::from_bundle(1, 34, 2)) == 14);
}

TEST_CASE("bounds on e") {
    CHECK(e_bounds_check(RuledSurfaceModel::from_bundle(1, 9, -1)).ok());
    const auto r = e_bounds_check(RuledSurfaceModel::from_bundle(1, 9, 3));
    CHECK_FALSE(r.ok());
    CHECK(e_bounds_check(RuledSurfaceModel::tschirnhausen(1, 35, 2, Splitting{16, 18})).ok());
    CHECK_FALSE(e_bounds_check(RuledSurfaceModel::from_bundle(1, 9, -3)).ok());
}

TEST_CASE("disjoint section") {
    const auto m = RuledSurfaceModel::tschirnhausen(1, 35, 2, Splitting{16, 18});
    const auto s = disjoint_section_class(m);
    CHECK(s.sigma == 1);
    CHECK(s.fib_deg == 2);
    CHECK(intersect(s, SurfaceClass::min_section(), m) == 0);
    auto flat = RuledSurfaceModel::from_bundle(1, 12, 0);
    flat.splitting = Splitting{6, 6};
    CHECK(disjoint_section_class(flat).fib_deg == 0);
    CHECK_THROWS_AS(disjoint_section_class(RuledSurfaceModel::from_bundle(1, 12, 0)), NotDecomposable);
}
