#include "ptawit/pta.hpp"

#include "ptawit/error.hpp"
#include "ptawit/volume.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ptawit {

int Pta::find_location(const std::string& name) const {
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i].name == name) return static_cast<int>(i);
    return -1;
}

int Pta::find_action(const std::string& name) const {
    for (std::size_t i = 0; i < actions.size(); ++i)
        if (actions[i] == name) return static_cast<int>(i);
    return -1;
}

std::int64_t Pta::max_constant() const {
    std::int64_t m = 0;
    for (const auto& l : locations) {
        m = std::max(m, l.invariant.max_constant());
        for (const auto& t : l.transitions) m = std::max(m, t.guard.max_constant());
    }
    return m;
}

std::int64_t Pta::effective_bound() const {
    if (declared_bound) return *declared_bound;
    return std::max<std::int64_t>(1, max_constant());
}

bool Pta::invariants_bounded() const {
    for (std::size_t i = 0; i < locations.size(); ++i) {
        if (static_cast<int>(i) == goal || static_cast<int>(i) == fail) continue;
        const Dbm& d = locations[i].invariant.dbm();
        if (d.is_empty()) continue;
        for (int c = 1; c <= real_clocks(); ++c)
            if (d.at(c, 0).is_pos_inf()) return false;
    }
    return true;
}

void normalize_pta(Pta& pta) {
    int n = pta.real_clocks();
    int loop = pta.find_action("loop");
    if (loop < 0) {
        loop = static_cast<int>(pta.actions.size());
        pta.actions.push_back("loop");
    }
    for (int sink : {pta.goal, pta.fail}) {
        if (sink < 0) continue;
        Location& l = pta.locations[static_cast<std::size_t>(sink)];
        Transition self;
        self.guard = ClockConstraint::top(n);
        self.action = loop;
        self.entries = {TransitionEntry{{}, sink, Rational(1)}};
        l.transitions = {self};
    }
    for (auto& l : pta.locations)
        for (auto& t : l.transitions) {
            Dbm g = canonicalize(intersect(t.guard.dbm(), l.invariant.dbm()));
            if (g != t.guard.dbm()) t.guard = ClockConstraint::from_dbm(g);
        }
}

namespace {

// Kuhn's augmenting-path matching on a small bipartite graph given as an
// adjacency list left -> right candidates. Returns match_left (or -1s).
std::vector<int> max_matching(const std::vector<std::vector<int>>& adj, int n_right) {
    std::vector<int> match_right(static_cast<std::size_t>(n_right), -1);
    std::vector<int> match_left(adj.size(), -1);
    std::vector<char> used;
    std::function<bool(int)> try_kuhn = [&](int v) -> bool {
        for (int to : adj[static_cast<std::size_t>(v)]) {
            if (used[static_cast<std::size_t>(to)]) continue;
            used[static_cast<std::size_t>(to)] = 1;
            int w = match_right[static_cast<std::size_t>(to)];
            if (w == -1 || try_kuhn(w)) {
                match_right[static_cast<std::size_t>(to)] = v;
                match_left[static_cast<std::size_t>(v)] = to;
                return true;
            }
        }
        return false;
    };
    for (std::size_t v = 0; v < adj.size(); ++v) {
        used.assign(static_cast<std::size_t>(n_right), 0);
        try_kuhn(static_cast<int>(v));
    }
    return match_left;
}

// Condition (3c): every positive non-fail entry of sub_t appears verbatim in
// orig_t. Targets are compared by location name.
bool entries_compatible(const Pta& orig, const Pta& sub, const Transition& orig_t,
                        const Transition& sub_t) {
    for (const auto& e : sub_t.entries) {
        if (e.target == sub.fail) continue;
        if (e.prob == 0) continue;
        const std::string& target_name = sub.locations[static_cast<std::size_t>(e.target)].name;
        bool found = false;
        for (const auto& oe : orig_t.entries) {
            if (orig.locations[static_cast<std::size_t>(oe.target)].name != target_name)
                continue;
            if (oe.resets != e.resets) continue;
            if (oe.prob != e.prob) return false;
            found = true;
            break;
        }
        if (!found) return false;
    }
    return true;
}

bool weak_compatible(const Pta& orig, const Pta& sub, const Transition& orig_t,
                     const Transition& sub_t) {
    if (orig.actions[static_cast<std::size_t>(orig_t.action)] !=
        sub.actions[static_cast<std::size_t>(sub_t.action)])
        return false;
    if (!includes(orig_t.guard.dbm(), sub_t.guard.dbm())) return false;
    return entries_compatible(orig, sub, orig_t, sub_t);
}

bool strong_compatible(const Pta& orig, const Pta& sub, const ClockConstraint& sub_inv,
                       const Transition& orig_t, const Transition& sub_t) {
    if (orig.actions[static_cast<std::size_t>(orig_t.action)] !=
        sub.actions[static_cast<std::size_t>(sub_t.action)])
        return false;
    // g' ≡ g ⊓ inv'(l) on canonical DBMs (both empty counts as equal)
    Dbm expect = canonicalize(intersect(orig_t.guard.dbm(), sub_inv.dbm()));
    if (sub_t.guard.dbm() != expect) return false;
    return entries_compatible(orig, sub, orig_t, sub_t);
}

SubsystemCheck fail_check(std::string reason) { return SubsystemCheck{false, std::move(reason)}; }

} // namespace

SubsystemCheck is_subsystem(const Pta& orig, const Pta& sub) {
    if (orig.clocks != sub.clocks) return fail_check("clock sets differ");
    {
        auto a = orig.actions;
        auto b = sub.actions;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return fail_check("action sets differ");
    }
    if (sub.goal < 0 || sub.fail < 0) return fail_check("goal or fail missing");
    if (sub.locations[static_cast<std::size_t>(sub.goal)].name !=
        orig.locations[static_cast<std::size_t>(orig.goal)].name)
        return fail_check("goal location differs");
    if (sub.locations[static_cast<std::size_t>(sub.fail)].name !=
        orig.locations[static_cast<std::size_t>(orig.fail)].name)
        return fail_check("fail location differs");
    if (sub.locations[static_cast<std::size_t>(sub.initial)].name !=
        orig.locations[static_cast<std::size_t>(orig.initial)].name)
        return fail_check("initial location differs");

    for (const auto& l : sub.locations) {
        int ol = orig.find_location(l.name);
        if (ol < 0) return fail_check("location " + l.name + " not in the original");
        const Location& orig_l = orig.locations[static_cast<std::size_t>(ol)];
        // condition 2: inv'(l) ⊩ inv(l)
        if (!includes(orig_l.invariant.dbm(), l.invariant.dbm()))
            return fail_check("invariant of " + l.name + " not included in the original");
        // condition 3: injective Φ under weak compatibility
        std::vector<std::vector<int>> adj(l.transitions.size());
        for (std::size_t i = 0; i < l.transitions.size(); ++i)
            for (std::size_t j = 0; j < orig_l.transitions.size(); ++j)
                if (weak_compatible(orig, sub, orig_l.transitions[j], l.transitions[i]))
                    adj[i].push_back(static_cast<int>(j));
        auto match = max_matching(adj, static_cast<int>(orig_l.transitions.size()));
        for (std::size_t i = 0; i < match.size(); ++i)
            if (match[i] < 0) {
                // drill into the reason for diagnostics
                const Transition& t = l.transitions[i];
                for (const auto& ot : orig_l.transitions) {
                    if (orig.actions[static_cast<std::size_t>(ot.action)] !=
                        sub.actions[static_cast<std::size_t>(t.action)])
                        continue;
                    if (!includes(ot.guard.dbm(), t.guard.dbm()))
                        return fail_check("guard not included at location " + l.name);
                    return fail_check("distribution mismatch at location " + l.name);
                }
                return fail_check("no transition with matching action at " + l.name);
            }
    }
    return SubsystemCheck{true, ""};
}

SubsystemCheck is_strong_subsystem(const Pta& orig, const Pta& sub) {
    SubsystemCheck weak = is_subsystem(orig, sub);
    if (!weak) return weak;

    for (const auto& l : sub.locations) {
        int ol = orig.find_location(l.name);
        const Location& orig_l = orig.locations[static_cast<std::size_t>(ol)];

        // (3*): an injective Φ within the strong compatibility relation whose
        // inverse extends to a total left inverse Ψ: a matching saturating
        // T'(l) plus a strong partner for every original transition.
        std::vector<std::vector<int>> adj(l.transitions.size());
        std::vector<char> orig_covered(orig_l.transitions.size(), 0);
        for (std::size_t i = 0; i < l.transitions.size(); ++i)
            for (std::size_t j = 0; j < orig_l.transitions.size(); ++j)
                if (strong_compatible(orig, sub, l.invariant, orig_l.transitions[j],
                                      l.transitions[i])) {
                    adj[i].push_back(static_cast<int>(j));
                    orig_covered[j] = 1;
                }
        auto match = max_matching(adj, static_cast<int>(orig_l.transitions.size()));
        for (std::size_t i = 0; i < match.size(); ++i)
            if (match[i] < 0)
                return fail_check("guard of a transition at " + l.name +
                                  " shrunk more than the invariant allows");
        for (std::size_t j = 0; j < orig_covered.size(); ++j)
            if (!orig_covered[j])
                return fail_check("original transition at " + l.name +
                                  " has no strong counterpart");

        // condition 4: inv'(l) closed under time successors within inv(l)
        if (!l.invariant.dbm().is_empty()) {
            Dbm successors = canonicalize(
                intersect(time_closure(l.invariant.dbm()), orig_l.invariant.dbm()));
            if (!includes(l.invariant.dbm(), successors))
                return fail_check("invariant of " + l.name +
                                  " not closed under time successors in the original");
        }
    }
    return SubsystemCheck{true, ""};
}

PtaVolume pta_volume(const Pta& pta, int threads) {
    PtaVolume out{true, Rational(0)};
    for (std::size_t i = 0; i < pta.locations.size(); ++i) {
        if (static_cast<int>(i) == pta.goal || static_cast<int>(i) == pta.fail) continue;
        const Dbm& d = pta.locations[i].invariant.dbm();
        if (d.is_empty()) continue;
        std::int64_t k = 1;
        bool bounded = true;
        for (int c = 1; c <= pta.real_clocks(); ++c) {
            const Bound& up = d.at(c, 0);
            if (up.is_pos_inf()) {
                bounded = false;
                break;
            }
            k = std::max(k, up.value());
        }
        if (!bounded) return PtaVolume{false, Rational(0)};
        out.value += dbm_volume(d, k, threads).value;
    }
    return out;
}

void fold_fail_mass(const Pta& pta, Transition& t, const std::vector<bool>& drop_entry) {
    std::vector<TransitionEntry> kept;
    Rational fail_mass(0);
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        const auto& e = t.entries[i];
        bool drop = i < drop_entry.size() && drop_entry[i];
        if (drop || e.target == pta.fail) {
            fail_mass += e.prob;
        } else {
            kept.push_back(e);
        }
    }
    if (fail_mass > 0) kept.push_back(TransitionEntry{{}, pta.fail, fail_mass});
    t.entries = std::move(kept);
}

Pta prune_to_locations(const Pta& pta, const std::vector<int>& keep) {
    std::vector<char> kept(pta.locations.size(), 0);
    for (int k : keep) kept[static_cast<std::size_t>(k)] = 1;
    for (int required : {pta.initial, pta.goal, pta.fail})
        if (!kept[static_cast<std::size_t>(required)])
            raise(ErrorKind::Internal, "prune_to_locations: must keep initial/goal/fail");

    Pta out;
    out.clocks = pta.clocks;
    out.actions = pta.actions;
    out.declared_bound = pta.declared_bound;
    std::vector<int> remap(pta.locations.size(), -1);
    for (std::size_t i = 0; i < pta.locations.size(); ++i) {
        if (!kept[i]) continue;
        remap[i] = static_cast<int>(out.locations.size());
        out.locations.push_back(pta.locations[i]);
    }
    out.initial = remap[static_cast<std::size_t>(pta.initial)];
    out.goal = remap[static_cast<std::size_t>(pta.goal)];
    out.fail = remap[static_cast<std::size_t>(pta.fail)];
    for (auto& l : out.locations) {
        for (auto& t : l.transitions) {
            std::vector<bool> drop(t.entries.size(), false);
            for (std::size_t i = 0; i < t.entries.size(); ++i)
                if (!kept[static_cast<std::size_t>(t.entries[i].target)]) drop[i] = true;
            fold_fail_mass(pta, t, drop);
            for (auto& e : t.entries) e.target = remap[static_cast<std::size_t>(e.target)];
        }
    }
    return out;
}

} // namespace ptawit
