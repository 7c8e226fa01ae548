#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisect/picard.hpp"

namespace trisect {

/// Degrees of the two summands of a decomposable bundle, b1 <= b2.
struct Splitting {
    int b1 = 0;
    int b2 = 0;
    bool operator==(const Splitting&) const = default;
};

enum class Decomposability { Unknown, Decomposable, Indecomposable };

const char* to_string(Decomposability d);

/// Numerical data of the ruled surface P(E) carrying a triple cover X -> Y.
///
/// `raw` models skip the Riemann-Hurwitz relation b = g_x - 3g_y + 2; this is
/// how intermediate surfaces of an elementary-transformation sequence and the
/// product surface Y x P^1 are represented.
struct RuledSurfaceModel {
    int g_y = 0;
    int g_x = 0;
    int b = 0;
    int n = 0;
    int e = 0;
    std::optional<Splitting> splitting;
    Decomposability decomposability = Decomposability::Unknown;
    bool raw = false;

    /// Surface of a triple cover with the given genera and e-invariant.
    /// Throws ParityError when e and b have different parity.
    static RuledSurfaceModel tschirnhausen(int g_y, int g_x, int e,
                                           std::optional<Splitting> splitting = std::nullopt);
    /// Raw surface from bundle degree b and e-invariant.
    static RuledSurfaceModel from_bundle(int g_y, int b, int e);
    /// Y x P^1 with b = n = e = 0.
    static RuledSurfaceModel product(int g_y);

    bool decomposable() const {
        return splitting.has_value() || decomposability == Decomposability::Decomposable;
    }

    /// Human-readable list of broken structural invariants (empty when valid).
    std::vector<std::string> invariant_violations() const;

    bool operator==(const RuledSurfaceModel&) const = default;
};

/// The class a*S0 + pi^*Z. `fib_deg` is deg Z; `fib_formal` optionally names Z.
struct SurfaceClass {
    int sigma = 0;
    int fib_deg = 0;
    std::optional<FormalDivisor> fib_formal;

    static SurfaceClass fiber() { return {0, 1, std::nullopt}; }
    static SurfaceClass min_section() { return {1, 0, std::nullopt}; }

    bool operator==(const SurfaceClass&) const = default;
};

int intersect(const SurfaceClass& c1, const SurfaceClass& c2, const RuledSurfaceModel& m);
SurfaceClass canonical_class(const RuledSurfaceModel& m);
SurfaceClass trisection_cover_class(const RuledSurfaceModel& m);

/// Adjunction: 1 + (c.c + c.K)/2. Throws ParityError if c.c + c.K is odd.
int arithmetic_genus(const SurfaceClass& c, const RuledSurfaceModel& m);

int m_invariant(const RuledSurfaceModel& m);

struct BoundsReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

BoundsReport e_bounds_check(const RuledSurfaceModel& m);

/// Section disjoint from S0 on a decomposable surface. Throws NotDecomposable.
SurfaceClass disjoint_section_class(const RuledSurfaceModel& m);

}  // namespace trisect
