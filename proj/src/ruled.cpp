#include "trisect/ruled.hpp"

#include <cstdlib>

#include "trisect/errors.hpp"

namespace trisect {

const char* to_string(Decomposability d) {
    switch (d) {
        case Decomposability::Decomposable: return "decomposable";
        case Decomposability::Indecomposable: return "indecomposable";
        case Decomposability::Unknown: break;
    }
    return "unknown";
}

RuledSurfaceModel RuledSurfaceModel::tschirnhausen(int g_y, int g_x, int e,
                                                   std::optional<Splitting> splitting) {
    RuledSurfaceModel m;
    m.g_y = g_y;
    m.g_x = g_x;
    m.b = g_x - 3 * g_y + 2;
    if ((m.b - e) % 2 != 0) {
        throw ParityError("e=" + std::to_string(e) + " and b=" + std::to_string(m.b) +
                          " differ in parity");
    }
    m.e = e;
    m.n = (e + m.b) / 2;
    m.splitting = splitting;
    if (splitting) m.decomposability = Decomposability::Decomposable;
    return m;
}

RuledSurfaceModel RuledSurfaceModel::from_bundle(int g_y, int b, int e) {
    if ((b - e) % 2 != 0) {
        throw ParityError("e=" + std::to_string(e) + " and b=" + std::to_string(b) +
                          " differ in parity");
    }
    RuledSurfaceModel m;
    m.g_y = g_y;
    m.b = b;
    m.g_x = b + 3 * g_y - 2;
    m.e = e;
    m.n = (e + b) / 2;
    m.raw = true;
    return m;
}

RuledSurfaceModel RuledSurfaceModel::product(int g_y) {
    RuledSurfaceModel m = from_bundle(g_y, 0, 0);
    m.splitting = Splitting{0, 0};
    m.decomposability = Decomposability::Decomposable;
    return m;
}

std::vector<std::string> RuledSurfaceModel::invariant_violations() const {
    std::vector<std::string> out;
    if (g_y < 0) out.push_back("g_y must be non-negative");
    if (!raw && b != g_x - 3 * g_y + 2) {
        out.push_back("b=" + std::to_string(b) + " but g_x - 3g_y + 2 = " +
                      std::to_string(g_x - 3 * g_y + 2));
    }
    if (e != 2 * n - b) {
        out.push_back("e=" + std::to_string(e) + " but 2n - b = " + std::to_string(2 * n - b));
    }
    if (splitting) {
        if (splitting->b1 > splitting->b2) out.push_back("splitting not ordered b1 <= b2");
        if (splitting->b1 + splitting->b2 != b) out.push_back("splitting degrees do not sum to b");
        if (splitting->b2 - splitting->b1 != e) out.push_back("splitting difference is not e");
    }
    if (splitting && decomposability == Decomposability::Indecomposable) {
        out.push_back("splitting present on a surface declared indecomposable");
    }
    return out;
}

int intersect(const SurfaceClass& c1, const SurfaceClass& c2, const RuledSurfaceModel& m) {
    return -m.e * c1.sigma * c2.sigma + c1.sigma * c2.fib_deg + c2.sigma * c1.fib_deg;
}

SurfaceClass canonical_class(const RuledSurfaceModel& m) {
    FormalDivisor z("B");
    z.add("N", -2);
    z.add("K_Y", 1);
    return {-2, m.b - 2 * m.n + 2 * m.g_y - 2, z};
}

SurfaceClass trisection_cover_class(const RuledSurfaceModel& m) {
    FormalDivisor z("N", 3);
    z.add("B", -1);
    return {3, 3 * m.n - m.b, z};
}

int arithmetic_genus(const SurfaceClass& c, const RuledSurfaceModel& m) {
    const SurfaceClass k = canonical_class(m);
    const int twice = intersect(c, c, m) + intersect(c, k, m);
    if (twice % 2 != 0) {
        throw ParityError("c.c + c.K = " + std::to_string(twice) + " is odd");
    }
    return 1 + twice / 2;
}

int m_invariant(const RuledSurfaceModel& m) {
    return (m.b - std::abs(m.e)) / 2 - 2;
}

BoundsReport e_bounds_check(const RuledSurfaceModel& m) {
    BoundsReport r;
    const auto add = [&](const std::string& s) { r.violations.push_back(s); };
    if (m.e < -m.g_y) add("e < -g_y");
    const bool decomposable = m.splitting || m.decomposability == Decomposability::Decomposable ||
                              m.g_y == 0;
    if (decomposable) {
        if (m.e < 0) add("e < 0 on a decomposable surface");
        if (3 * m.e > m.b) add("e > b/3");
        if (m.splitting) {
            const auto [b1, b2] = *m.splitting;
            if (3 * b1 < m.b) add("b1 < b/3");
            if (2 * b1 > m.b) add("b1 > b/2");
            if (2 * b2 < m.b) add("b2 < b/2");
            if (3 * b2 > 2 * m.b) add("b2 > 2b/3");
        }
    } else if (m.e > 2 * m.g_y - 2) {
        add("e > 2g_y - 2");
    }
    return r;
}

SurfaceClass disjoint_section_class(const RuledSurfaceModel& m) {
    if (!m.splitting) throw NotDecomposable("no splitting recorded for this surface");
    FormalDivisor z("B2");
    z.add("B1", -1);
    return {1, m.splitting->b2 - m.splitting->b1, z};
}

}  // namespace trisect
