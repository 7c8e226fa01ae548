#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trisect/picard.hpp"
#include "trisect/ruled.hpp"

namespace trisect {

/// Multiplicity chain of a trisection singularity and of its infinitely near
/// singular points. `through[i]` lists the tracked sections passing through
/// the i-th point of the chain (missing entries mean none).
struct SingularityProfile {
    std::string point;
    std::string fiber;
    std::vector<int> chain;
    std::vector<std::set<std::string>> through;

    int multiplicity() const { return chain.empty() ? 0 : chain.front(); }
    int delta() const;

    bool operator==(const SingularityProfile&) const = default;
};

struct TrackedSection {
    std::string id;
    SurfaceClass cls;
    std::set<std::string> marked_points;

    bool is_min_degree() const { return cls.fib_deg == 0; }

    bool operator==(const TrackedSection&) const = default;
};

struct TrackedTrisection {
    SurfaceClass cls;
    std::vector<SingularityProfile> singularities;
    std::set<std::string> smooth_points;

    int delta_total() const;
    const SingularityProfile* profile_at(const std::string& point) const;

    bool operator==(const TrackedTrisection&) const = default;
};

struct ElmStep {
    std::string center;
    std::string fiber;
    bool on_min_section = false;
    std::set<std::string> on_sections;
    int trisection_multiplicity = 0;

    bool operator==(const ElmStep&) const = default;
};

/// Symbolic splitting E = O(low) + O(high). `low_section` / `high_section`
/// name the tracked sections cut out by the two quotients, when known.
struct FormalSplitting {
    FormalDivisor low;
    FormalDivisor high;
    std::string low_section;
    std::string high_section;

    bool operator==(const FormalSplitting&) const = default;
};

/// A fiber already used as a center. `image_point` is the point the old fiber
/// contracted to; `continuation_sections` may carry a further center on it.
struct ConsumedFiber {
    std::string image_point;
    std::set<std::string> continuation_sections;

    bool operator==(const ConsumedFiber&) const = default;
};

struct UndoRecord {
    std::optional<Splitting> splitting;
    Decomposability decomposability = Decomposability::Unknown;
    bool raw = false;
    std::vector<std::set<std::string>> marked_points;
    std::vector<SingularityProfile> singularities;
    std::set<std::string> smooth_points;
    std::optional<FormalSplitting> formal_splitting;
    std::map<std::string, std::string> point_fibers;
    std::map<std::string, ConsumedFiber> consumed;
    EquivalenceLedger ledger;

    bool operator==(const UndoRecord&) const = default;
};

struct HistoryEntry {
    ElmStep step;
    std::string image_point;
    std::vector<std::string> notes;
    UndoRecord undo;

    bool operator==(const HistoryEntry&) const = default;
};

struct ElmState {
    RuledSurfaceModel surface;
    std::vector<TrackedSection> sections;
    std::optional<TrackedTrisection> trisection;
    EquivalenceLedger ledger;
    std::optional<FormalSplitting> formal_splitting;
    std::map<std::string, std::string> point_fibers;
    std::map<std::string, ConsumedFiber> consumed;
    std::vector<HistoryEntry> history;

    const TrackedSection* section(const std::string& id) const;
    int delta_total() const { return trisection ? trisection->delta_total() : 0; }
    /// Points on the given fiber that the state knows about.
    std::vector<std::string> points_on_fiber(const std::string& fiber) const;

    bool operator==(const ElmState&) const = default;
};

/// Elementary transformation at `step.center`. Throws InvalidStep or
/// ProfileMismatch.
ElmState apply_elm(const ElmState& state, const ElmStep& step);

/// The step that undoes `entry` (center at the contracted fiber's image).
ElmStep inverse_step(const ElmState& state, const HistoryEntry& entry);

/// Undoes the last step. Throws EmptyHistory.
ElmState apply_inverse(const ElmState& state);

enum class ResolveStrategy { Greedy, Exhaustive };

struct ResolveResult {
    ElmState final_state;
    std::vector<ElmStep> steps;
    int alpha = 0;
    int initial_delta = 0;
    bool resolved = false;
    /// Exhaustive only: some minimal sequence raises e at every step.
    bool all_raising_minimal = false;
    std::size_t explored = 0;
};

/// Steps are taken at singular points only. Exhaustive search is breadth
/// first, bounded in depth by the initial delta,
/// and throws BudgetExceeded once more than `budget` states are expanded.
ResolveResult resolve_singularities(const ElmState& state, ResolveStrategy strategy,
                                    std::size_t budget = 200000);

/// The step resolve_singularities would take at a profile point.
ElmStep step_at_profile(const ElmState& state, const SingularityProfile& profile);

struct OracleReport {
    bool agree = true;
    std::vector<std::string> mismatches;
    int e_after = 0;
    int trisection_fib_deg = 0;
    int multiplicity_at_image = 0;
    int genus_change = 0;
};

/// Recomputes a step in the Picard lattice of the blown-up surface and
/// compares every class update with apply_elm.
OracleReport blowup_oracle_check(const ElmState& state, const ElmStep& step);

/// Intersection number of two tracked sections. Throws UnknownSection.
int sections_pairwise_check(const ElmState& state, const std::string& s1, const std::string& s2);

}  // namespace trisect
