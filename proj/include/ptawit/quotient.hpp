#pragma once

#include "ptawit/pta.hpp"
#include "ptawit/region.hpp"

#include <string>
#include <vector>

namespace ptawit {

// Finite MDP quotient of the PTA semantics under the region equivalence.
// States: 0 = goal, 1 = fail (absorbing), then one state per reachable
// region (state id = region index + 2). Delay steps appear as tau edges to
// every strictly later region of the invariant-respecting successor chain;
// tau self-loops are omitted (they are exactly the Zeno behaviors excluded
// by time-divergent scheduling). Distribution mass whose reset valuation
// violates the target invariant is redirected to fail.
class QuotientMdp {
public:
    static constexpr int kGoal = 0;
    static constexpr int kFail = 1;

    struct Edge {
        int action; // pta action, or tau_action / dead_action
        std::vector<std::pair<int, Rational>> dist; // (state, prob), sorted
    };

    Pta pta;                 // the source model (normalized)
    std::int64_t k = 1;      // clock bound used for the regions
    int initial = kGoal;     // may be kGoal/kFail for degenerate models
    std::vector<Region> regions;
    std::vector<Dbm> region_dbms;            // canonical, parallel to regions
    std::vector<std::vector<Edge>> edges;    // per region state
    int tau_action = -1;     // |Act|
    int dead_action = -1;    // |Act|+1; Dirac to fail at deadlock regions

    int num_states() const { return static_cast<int>(regions.size()) + 2; }
    int num_region_states() const { return static_cast<int>(regions.size()); }
    int state_of(int region_index) const { return region_index + 2; }
    int region_index(int state) const { return state - 2; }
    bool is_region_state(int state) const { return state >= 2; }
    int location_of(int state) const;
    std::string action_name(int action) const;
    std::string state_label(int state) const;
};

// Constructs the reachable quotient. Throws UnboundedConstant when a model
// constant exceeds k, RegionUnsound when diagonal constraints are combined
// with clocks that invariants do not bound by k, InitialInvariantViolated
// when 0 violates inv(l0).
QuotientMdp build_quotient(const Pta& pta, std::int64_t k);

inline QuotientMdp build_quotient(const Pta& pta) {
    return build_quotient(pta, pta.effective_bound());
}

// The proceed assumption: from every state, under every scheduler, goal or
// fail is reached with positive probability — equivalently, no set of
// region states is closed under some choice of edges.
struct ProceedCheck {
    bool ok;
    std::vector<int> offending; // states that can avoid goal/fail forever
};
ProceedCheck check_proceed_assumption(const QuotientMdp& m);

// GraphViz export; tau edges dashed, states labeled "location | zone".
std::string quotient_to_dot(const QuotientMdp& m);

} // namespace ptawit
