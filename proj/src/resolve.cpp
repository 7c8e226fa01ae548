#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "trisect/elm.hpp"
#include "trisect/errors.hpp"

namespace trisect {

ElmStep step_at_profile(const ElmState& state, const SingularityProfile& profile) {
    ElmStep step;
    step.center = profile.point;
    step.fiber = profile.fiber;
    step.trisection_multiplicity = profile.multiplicity();
    for (const auto& sec : state.sections) {
        if (!sec.marked_points.count(profile.point)) continue;
        step.on_sections.insert(sec.id);
        if (sec.is_min_degree()) step.on_min_section = true;
    }
    return step;
}

namespace {

std::vector<const SingularityProfile*> ordered_profiles(const ElmState& s) {
    std::vector<const SingularityProfile*> out;
    if (!s.trisection) return out;
    for (const auto& p : s.trisection->singularities) out.push_back(&p);
    std::sort(out.begin(), out.end(),
              [](const auto* a, const auto* b) { return a->point < b->point; });
    return out;
}

std::string state_key(const ElmState& s, bool raising) {
    std::ostringstream os;
    os << s.surface.e << '|' << raising << '|';
    for (const auto& sec : s.sections) os << sec.id << ':' << sec.cls.fib_deg << ',';
    os << '|';
    for (const auto* p : ordered_profiles(s)) {
        os << p->point << '@' << p->fiber << '[';
        for (int r : p->chain) os << r << ',';
        os << ']';
    }
    os << '|' << s.trisection->cls.fib_deg;
    for (const auto& q : s.trisection->smooth_points) os << ';' << q;
    return os.str();
}

struct Node {
    ElmState state;
    std::vector<ElmStep> steps;
    bool raising = true;
};

}  // namespace

ResolveResult resolve_singularities(const ElmState& state, ResolveStrategy strategy,
                                    std::size_t budget) {
    ResolveResult res;
    res.final_state = state;
    res.initial_delta = state.delta_total();
    if (res.initial_delta == 0) {
        res.resolved = true;
        res.all_raising_minimal = true;
        return res;
    }

    if (strategy == ResolveStrategy::Greedy) {
        ElmState cur = state;
        while (cur.delta_total() > 0 && static_cast<int>(res.steps.size()) <= res.initial_delta) {
            const ElmStep step = step_at_profile(cur, *ordered_profiles(cur).front());
            cur = apply_elm(cur, step);
            res.steps.push_back(step);
            ++res.explored;
        }
        res.resolved = cur.delta_total() == 0;
        res.alpha = static_cast<int>(res.steps.size());
        res.final_state = std::move(cur);
        return res;
    }

    std::deque<Node> frontier;
    frontier.push_back(Node{state, {}, true});
    std::unordered_set<std::string> seen{state_key(state, true)};
    // Every step lowers delta by at least one, so no resolution is longer
    // than the initial delta.
    for (int depth = 0; !frontier.empty() && depth < res.initial_delta; ++depth) {
        std::deque<Node> next;
        std::optional<Node> best;
        bool raising_found = false;
        for (const Node& node : frontier) {
            for (const auto* prof : ordered_profiles(node.state)) {
                if (++res.explored > budget) {
                    throw BudgetExceeded("exhaustive resolution passed " + std::to_string(budget) +
                                         " expansions");
                }
                const ElmStep step = step_at_profile(node.state, *prof);
                Node child{apply_elm(node.state, step), node.steps, node.raising && step.on_min_section};
                child.steps.push_back(step);
                if (child.state.delta_total() == 0) {
                    if (!best) best = child;
                    raising_found = raising_found || child.raising;
                    continue;
                }
                if (seen.insert(state_key(child.state, child.raising)).second) {
                    next.push_back(std::move(child));
                }
            }
        }
        if (best) {
            res.resolved = true;
            res.alpha = static_cast<int>(best->steps.size());
            res.steps = best->steps;
            res.final_state = best->state;
            res.all_raising_minimal = raising_found;
            return res;
        }
        frontier = std::move(next);
    }
    return res;
}

}  // namespace trisect
