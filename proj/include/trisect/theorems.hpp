#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisect/elm.hpp"
#include "trisect/ruled.hpp"

namespace trisect {

struct Rational {
    long long num = 0;
    long long den = 1;

    std::string to_string() const;
    bool operator==(const Rational&) const = default;
};

enum class Verdict { MustFactor, Impossible, MinimalRequiresDecomposable, Guaranteed, Unknown };

const char* to_string(Verdict v);

struct Thresholds {
    std::optional<Rational> cs;
    std::optional<int> theorem_b;
    std::optional<int> theorem_a;
};

struct MorphismVerdict {
    Verdict verdict = Verdict::Unknown;
    Thresholds thresholds;
    std::string reason;
};

bool is_prime(int k);

/// Degree-d maps from a k-sheeted cover must factor when
/// d < (g_x - k g_y + k - 1)/(k - 1). Throws NonPrimeK.
MorphismVerdict cs_classical(int g_x, int g_y, int k, int d);

/// (b + |e|)/2.
int theorem_b_bound(const RuledSurfaceModel& m);

/// (b + |e|)/2 + 4g_y when g_x >= 9g_y + 4.
std::optional<int> theorem_a_threshold(const RuledSurfaceModel& m);

MorphismVerdict verdict(const RuledSurfaceModel& m, int d);

enum class LinearSeriesGeometry { VeryAmple, SeparatesFibers };

const char* to_string(LinearSeriesGeometry g);

struct H0Chain {
    int a = 0;
    int h0_surface = 0;         ///< h^0(P(E), K + X - pi^*A), via the bundle on Y
    int h0_fA = 0;              ///< h^0(X, f^*A)
    int h0_KX_fA = 0;           ///< h^0(X, K_X - f^*A), via Riemann-Roch on X
    int vanishing_degree = 0;   ///< deg(-B + N + A), must be negative
    int cut_out_margin = 0;     ///< C.X - C.C' for C, C' in |K + X - pi^*A|
    bool cut_out = false;
    LinearSeriesGeometry geometry = LinearSeriesGeometry::VeryAmple;
};

/// Throws PreconditionFailed (g_x < 9g_y + 4) or OutOfWindow.
H0Chain h0_chain(const RuledSurfaceModel& m, int a);

enum class RangeTag { Construction, BrillNoetherExtension, Nonspecial };

const char* to_string(RangeTag t);

struct DegreeRange {
    RangeTag tag = RangeTag::Construction;
    int lo = 0;
    std::optional<int> hi;  ///< nullopt: unbounded above
};

struct PencilRanges {
    std::vector<DegreeRange> ranges;
    int threshold = 0;
    int construction_min = 0;
    int construction_max = 0;
    std::vector<int> gaps;  ///< degrees >= threshold covered by no range

    bool contains(int d) const;
};

/// Throws PreconditionFailed.
PencilRanges pencil_degree_range(const RuledSurfaceModel& m);

struct GonalityConsequence {
    bool applies = false;
    Rational cs_threshold;
    int k_times_gy_plus_one = 0;
    std::string conclusion;
};

GonalityConsequence gonality_consequence(int g_x, int g_y, int k);

struct CharacterizationReport {
    bool consistent = false;
    bool final_trivial = false;
    bool relation_holds = false;
    int final_e = 0;
    std::vector<std::string> issues;
    std::vector<ElmStep> script;
    std::optional<ElmState> final_state;
};

/// Runs elm at the e marked points of a section disjoint from S0 and compares
/// triviality of the result with the relation sum(q_i) ~ B2 - B1.
/// Throws PreconditionFailed.
CharacterizationReport minimal_degree_characterization(const ElmState& state);

enum class Parity { Even, Odd };

const char* to_string(Parity p);

struct ScriptBlock {
    std::string name;   ///< T3, T1, T2 or T
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct ConstructionPlan {
    int g_y = 0;
    int g_x = 0;
    int target_d = 0;
    Parity parity = Parity::Even;
    int d0 = 0;
    bool extended = false;
    int t = 0;
    int t1 = 0;
    int t2 = 0;
    int deg_D = 0;
    int deg_Dprime = 0;
    int deg_B1 = 0;
    int deg_B2 = 0;
    int e_planned = 0;
    bool halphen_used = false;
    std::vector<ElmStep> elm_script;
    std::vector<ScriptBlock> blocks;
};

struct PlanOutcome {
    std::optional<ConstructionPlan> plan;
    bool in_range = false;
    std::string reason;
};

/// Smallest admissible t for the given parity and mode.
int plan_t_floor(int g_y, Parity parity, bool use_halphen);

/// Throws PreconditionFailed when g_y < 1, g_x < 37g_y - 2, or Halphen mode
/// is requested with g_y < 2.
PlanOutcome plan_construction(int g_y, int g_x, int d, bool use_halphen);

std::vector<std::string> plan_invariant_violations(const ConstructionPlan& p);

struct ExecutionReport {
    bool verified = false;
    std::vector<std::string> failures;
    std::vector<std::string> checks;
    std::optional<ElmState> initial_state;
    std::optional<ElmState> final_state;
    int family_intersection = 0;
};

ExecutionReport execute_plan(const ConstructionPlan& p);

}  // namespace trisect
