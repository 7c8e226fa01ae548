#include "trisect/elm.hpp"

#include <algorithm>

#include "trisect/errors.hpp"

namespace trisect {

int SingularityProfile::delta() const {
    int d = 0;
    for (int r : chain) d += r * (r - 1) / 2;
    return d;
}

int TrackedTrisection::delta_total() const {
    int d = 0;
    for (const auto& p : singularities) d += p.delta();
    return d;
}

const SingularityProfile* TrackedTrisection::profile_at(const std::string& point) const {
    for (const auto& p : singularities)
        if (p.point == point) return &p;
    return nullptr;
}

const TrackedSection* ElmState::section(const std::string& id) const {
    for (const auto& s : sections)
        if (s.id == id) return &s;
    return nullptr;
}

std::vector<std::string> ElmState::points_on_fiber(const std::string& fiber) const {
    std::vector<std::string> out;
    for (const auto& [p, f] : point_fibers)
        if (f == fiber) out.push_back(p);
    return out;
}

namespace {

void fail(const std::string& msg) { throw InvalidStep(msg); }

// e, and the S0-basis fiber degrees of every tracked curve.
void update_classes(ElmState& s, const ElmStep& step) {
    int de = step.on_min_section ? 1 : -1;
#ifdef TRISECT_FAULT_NEGATE_E_UPDATE
    de = -de;
#endif
    s.surface.e += de;

    const auto shift = [&](SurfaceClass& c, int mult) {
        const int dz = step.on_min_section ? c.sigma - mult : -mult;
        c.fib_deg += dz;
        if (c.fib_formal) c.fib_formal->add(step.fiber, dz);
    };
    for (auto& sec : s.sections) shift(sec.cls, step.on_sections.count(sec.id) ? 1 : 0);
    if (s.trisection) shift(s.trisection->cls, step.trisection_multiplicity);
}

std::string fresh_image_name(const ElmState& s, const std::string& center) {
    std::string name = center + "'";
    const auto taken = [&](const std::string& n) {
        if (s.point_fibers.count(n)) return true;
        for (const auto& sec : s.sections)
            if (sec.marked_points.count(n)) return true;
        if (s.trisection) {
            if (s.trisection->smooth_points.count(n) || s.trisection->profile_at(n)) return true;
        }
        return false;
    };
    while (taken(name)) name += "'";
    return name;
}

std::string fiber_of(const ElmState& s, const std::string& point) {
    auto it = s.point_fibers.find(point);
    return it == s.point_fibers.end() ? std::string() : it->second;
}

void validate(const ElmState& s, const ElmStep& step) {
    const int r = step.trisection_multiplicity;
    if (r < 0 || r > 3) fail("trisection multiplicity must lie in 0..3");
    if (step.center.empty() || step.fiber.empty()) fail("step needs a center and a fiber");
    const std::string known = fiber_of(s, step.center);
    if (!known.empty() && known != step.fiber) {
        fail("point " + step.center + " lies on fiber " + known + ", not " + step.fiber);
    }
    if (s.ledger.declared(step.fiber) && s.ledger.symbol_degree(step.fiber) != 1) {
        fail("fiber symbol " + step.fiber + " is declared with degree != 1");
    }

    for (const auto& id : step.on_sections)
        if (!s.section(id)) fail("unknown section '" + id + "'");

    for (const auto& sec : s.sections) {
        const bool claimed = step.on_sections.count(sec.id) != 0;
        if (sec.marked_points.count(step.center) && !claimed) {
            fail("section " + sec.id + " contains " + step.center + " but is not listed");
        }
        if (!claimed) continue;
        for (const auto& q : sec.marked_points) {
            if (q != step.center && fiber_of(s, q) == step.fiber) {
                fail("section " + sec.id + " already meets fiber " + step.fiber + " at " + q);
            }
        }
        if (sec.is_min_degree() && !step.on_min_section) {
            fail("section " + sec.id + " is a minimal-degree section; the center lies on it");
        }
    }
    if (step.on_min_section && s.surface.e > 0) {
        for (const auto& sec : s.sections) {
            if (sec.is_min_degree() && !step.on_sections.count(sec.id)) {
                fail("the minimal section " + sec.id + " is unique for e > 0 and must contain the center");
            }
        }
    }

    const SingularityProfile* prof = s.trisection ? s.trisection->profile_at(step.center) : nullptr;
    if (!s.trisection) {
        if (r != 0) throw ProfileMismatch("no trisection tracked but multiplicity " + std::to_string(r));
    } else if (prof) {
        if (prof->fiber != step.fiber) fail("profile at " + step.center + " lies on another fiber");
        if (r != prof->multiplicity()) {
            throw ProfileMismatch("profile at " + step.center + " has multiplicity " +
                                  std::to_string(prof->multiplicity()) + ", step says " +
                                  std::to_string(r));
        }
    } else if (s.trisection->smooth_points.count(step.center)) {
        if (r != 1) throw ProfileMismatch(step.center + " is a smooth point of the trisection");
    } else if (r >= 2) {
        throw ProfileMismatch("no singularity declared at " + step.center);
    }

    if (s.trisection) {
        int load = r;
        for (const auto& p : s.trisection->smooth_points)
            if (p != step.center && fiber_of(s, p) == step.fiber) load += 1;
        for (const auto& p : s.trisection->singularities)
            if (p.point != step.center && p.fiber == step.fiber) load += p.multiplicity();
        if (load > 3) fail("trisection multiplicities on fiber " + step.fiber + " exceed 3");
    }

    auto used = s.consumed.find(step.fiber);
    if (used != s.consumed.end()) {
        const bool chain = prof != nullptr;
        bool along = !known.empty() ? false : !step.on_sections.empty();
        for (const auto& id : step.on_sections)
            if (!used->second.continuation_sections.count(id)) along = false;
        if (step.center == used->second.image_point && !chain) along = false;
        if (!chain && !along) {
            fail("fiber " + step.fiber + " was already used; only an infinitely near continuation may reuse it");
        }
    }
}

UndoRecord snapshot(const ElmState& s) {
    UndoRecord u;
    u.splitting = s.surface.splitting;
    u.decomposability = s.surface.decomposability;
    u.raw = s.surface.raw;
    for (const auto& sec : s.sections) u.marked_points.push_back(sec.marked_points);
    if (s.trisection) {
        u.singularities = s.trisection->singularities;
        u.smooth_points = s.trisection->smooth_points;
    }
    u.formal_splitting = s.formal_splitting;
    u.point_fibers = s.point_fibers;
    u.consumed = s.consumed;
    u.ledger = s.ledger;
    return u;
}

void update_splitting(ElmState& s, const ElmState& before, const ElmStep& step,
                      std::vector<std::string>& notes) {
    const int e = before.surface.e;
    std::string disjoint;
    for (const auto& id : step.on_sections) {
        const auto* sec = before.section(id);
        if (sec->cls.fib_deg == e && e >= 1) disjoint = id;
    }

    if (auto& sp = s.surface.splitting) {
        if (step.on_min_section) {
            sp->b1 -= 1;
        } else if (!disjoint.empty()) {
            sp->b2 -= 1;
        } else {
            sp.reset();
            notes.push_back("splitting no longer tracked");
        }
        if (sp && sp->b1 > sp->b2) std::swap(sp->b1, sp->b2);
    }
    if (!s.surface.splitting) s.surface.decomposability = Decomposability::Unknown;

    if (auto& fs = s.formal_splitting) {
        const FormalDivisor p(step.fiber);
        if (step.on_min_section) {
            if (!fs->high_section.empty() && step.on_sections.count(fs->high_section)) {
                fs->high -= p;
            } else {
                fs->low -= p;
                for (const auto& id : step.on_sections)
                    if (before.section(id)->is_min_degree()) fs->low_section = id;
            }
        } else if (!disjoint.empty()) {
            fs->high -= p;
            fs->high_section = disjoint;
        } else {
            fs.reset();
        }
        if (fs && degree(fs->low, s.ledger) > degree(fs->high, s.ledger)) {
            std::swap(fs->low, fs->high);
            std::swap(fs->low_section, fs->high_section);
        }
    }
}

void update_points(ElmState& s, const ElmStep& step, const std::string& image,
                   std::vector<std::string>& notes) {
    const int r = step.trisection_multiplicity;
    const std::string& y = step.fiber;
    bool tail_remains = false;
    std::set<std::string> tail_through;

    if (s.trisection) {
        auto& t = *s.trisection;
        auto& sing = t.singularities;
        std::optional<SingularityProfile> other;
        for (const auto& p : sing)
            if (p.fiber == y && p.point != step.center) other = p;
        std::set<std::string> other_smooth;
        for (const auto& p : t.smooth_points)
            if (p != step.center && fiber_of(s, p) == y) other_smooth.insert(p);

        auto it = std::find_if(sing.begin(), sing.end(),
                               [&](const SingularityProfile& p) { return p.point == step.center; });
        if (it != sing.end()) {
#ifdef TRISECT_FAULT_DROP_DELTA_DECREMENT
            const bool consume = r != 2;
#else
            const bool consume = true;
#endif
            if (consume) {
                it->chain.erase(it->chain.begin());
                if (!it->through.empty()) it->through.erase(it->through.begin());
            }
            if (it->chain.empty()) {
                notes.push_back("chain at " + step.center + " exhausted; treated as smooth");
                sing.erase(it);
            } else {
                tail_remains = true;
                if (!it->through.empty()) tail_through = it->through.front();
            }
        }
        t.smooth_points.erase(step.center);

        if (other) {
            sing.erase(std::remove_if(sing.begin(), sing.end(),
                                      [&](const SingularityProfile& p) { return p.point == other->point; }),
                       sing.end());
        }
        for (const auto& p : other_smooth) t.smooth_points.erase(p);

        const int k = 3 - r;
        if (k == 1) {
            t.smooth_points.insert(image);
        } else if (k >= 2) {
            SingularityProfile created;
            created.point = image;
            created.fiber = y;
            created.chain = {k};
            std::set<std::string> through;
            for (const auto& sec : s.sections)
                if (!step.on_sections.count(sec.id)) through.insert(sec.id);
            created.through = {through};
            if (other) {
                created.chain.insert(created.chain.end(), other->chain.begin(), other->chain.end());
                created.through.resize(1 + (other->through.empty() ? 0 : other->chain.size()));
                for (std::size_t i = 0; i < other->through.size(); ++i)
                    created.through[1 + i] = other->through[i];
            }
            notes.push_back("created singular point " + image + " with multiplicity " + std::to_string(k));
            sing.push_back(std::move(created));
        }
    }

    for (auto& sec : s.sections) {
        const bool contains = step.on_sections.count(sec.id) != 0;
        for (auto it = sec.marked_points.begin(); it != sec.marked_points.end();) {
            if (fiber_of(s, *it) == y) it = sec.marked_points.erase(it);
            else ++it;
        }
        if (contains) {
            if (tail_remains && tail_through.count(sec.id)) sec.marked_points.insert(step.center);
        } else {
            sec.marked_points.insert(image);
        }
    }

    for (auto it = s.point_fibers.begin(); it != s.point_fibers.end();) {
        if (it->second == y) it = s.point_fibers.erase(it);
        else ++it;
    }
    s.point_fibers[image] = y;
    if (tail_remains) s.point_fibers[step.center] = y;
    s.consumed[y] = ConsumedFiber{image, step.on_sections};
}

}  // namespace

ElmState apply_elm(const ElmState& state, const ElmStep& step) {
    validate(state, step);

    ElmState s = state;
    HistoryEntry entry;
    entry.step = step;
    entry.undo = snapshot(state);

    try {
        s.ledger.declare(step.fiber, 1);
    } catch (const InvalidRelation& ex) {
        throw InvalidStep(ex.what());
    }
    if (!s.point_fibers.count(step.center)) s.point_fibers[step.center] = step.fiber;

    const std::string image = fresh_image_name(s, step.center);
    entry.image_point = image;

    update_classes(s, step);
    s.surface.b -= 1;
    s.surface.n = (s.surface.e + s.surface.b) / 2;
    s.surface.raw = true;
    update_splitting(s, state, step, entry.notes);
    update_points(s, step, image, entry.notes);

    s.history.push_back(std::move(entry));
    return s;
}

ElmStep inverse_step(const ElmState& state, const HistoryEntry& entry) {
    ElmStep inv;
    inv.center = entry.image_point;
    inv.fiber = entry.step.fiber;
    inv.on_min_section = !entry.step.on_min_section;
    for (const auto& sec : state.sections)
        if (!entry.step.on_sections.count(sec.id)) inv.on_sections.insert(sec.id);
    inv.trisection_multiplicity = 3 - entry.step.trisection_multiplicity;
    return inv;
}

ElmState apply_inverse(const ElmState& state) {
    if (state.history.empty()) throw EmptyHistory("no elementary transformation to undo");
    ElmState s = state;
    const HistoryEntry entry = s.history.back();
    s.history.pop_back();

    update_classes(s, inverse_step(state, entry));
    s.surface.b += 1;
    s.surface.n = (s.surface.e + s.surface.b) / 2;

    const UndoRecord& u = entry.undo;
    s.surface.splitting = u.splitting;
    s.surface.decomposability = u.decomposability;
    s.surface.raw = u.raw;
    for (std::size_t i = 0; i < s.sections.size() && i < u.marked_points.size(); ++i)
        s.sections[i].marked_points = u.marked_points[i];
    if (s.trisection) {
        s.trisection->singularities = u.singularities;
        s.trisection->smooth_points = u.smooth_points;
    }
    s.formal_splitting = u.formal_splitting;
    s.point_fibers = u.point_fibers;
    s.consumed = u.consumed;
    s.ledger = u.ledger;
    return s;
}

int sections_pairwise_check(const ElmState& state, const std::string& s1, const std::string& s2) {
    const auto* a = state.section(s1);
    const auto* b = state.section(s2);
    if (!a) throw UnknownSection("unknown section '" + s1 + "'");
    if (!b) throw UnknownSection("unknown section '" + s2 + "'");
    return intersect(a->cls, b->cls, state.surface);
}

}  // namespace trisect
