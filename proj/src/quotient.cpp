#include "ptawit/quotient.hpp"

#include "ptawit/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace ptawit {

int QuotientMdp::location_of(int state) const {
    if (state == kGoal) return pta.goal;
    if (state == kFail) return pta.fail;
    return regions[static_cast<std::size_t>(region_index(state))].location;
}

std::string QuotientMdp::action_name(int action) const {
    if (action == tau_action) return "tau";
    if (action == dead_action) return "dead";
    return pta.actions[static_cast<std::size_t>(action)];
}

std::string QuotientMdp::state_label(int state) const {
    if (state == kGoal) return "goal";
    if (state == kFail) return "fail";
    const Region& r = regions[static_cast<std::size_t>(region_index(state))];
    std::string zone = region_dbms[static_cast<std::size_t>(region_index(state))].str(pta.clocks);
    std::replace(zone.begin(), zone.end(), '\n', ',');
    std::string out = pta.locations[static_cast<std::size_t>(r.location)].name + " | ";
    for (char c : zone) out += (c == ',') ? std::string(", ") : std::string(1, c);
    return out;
}

namespace {

// A zone is diagonal-free when dropping all clock-difference entries (and
// re-canonicalizing) leaves its valuation set unchanged.
bool diagonal_free(const Dbm& zone) {
    if (zone.is_empty()) return true;
    Dbm relaxed = zone;
    for (int i = 1; i < zone.dim(); ++i)
        for (int j = 1; j < zone.dim(); ++j)
            if (i != j) relaxed.at(i, j) = Bound::pos_inf();
    return canonicalize(relaxed) == canonicalize(zone);
}

} // namespace

QuotientMdp build_quotient(const Pta& pta, std::int64_t k) {
    if (pta.max_constant() > k)
        raise(ErrorKind::UnboundedConstant,
              "build_quotient: model constant " + std::to_string(pta.max_constant()) +
                  " exceeds K=" + std::to_string(k));

    // The per-clock region equivalence with the "free" class above K is only
    // adequate for diagonal constraints when no clock can exceed K.
    bool has_diagonal = false;
    for (const auto& l : pta.locations) {
        if (!diagonal_free(l.invariant.dbm())) has_diagonal = true;
        for (const auto& t : l.transitions)
            if (!diagonal_free(t.guard.dbm())) has_diagonal = true;
    }
    if (has_diagonal && !pta.invariants_bounded())
        raise(ErrorKind::RegionUnsound,
              "build_quotient: diagonal constraints require invariants that bound "
              "every clock");

    QuotientMdp m;
    m.pta = pta;
    m.k = k;
    m.tau_action = static_cast<int>(pta.actions.size());
    m.dead_action = m.tau_action + 1;

    Valuation zero(pta.real_clocks());
    if (!satisfies(zero, pta.locations[static_cast<std::size_t>(pta.initial)].invariant.dbm()))
        raise(ErrorKind::InitialInvariantViolated,
              "build_quotient: zero valuation violates the initial invariant");

    if (pta.initial == pta.goal || pta.initial == pta.fail) {
        m.initial = pta.initial == pta.goal ? QuotientMdp::kGoal : QuotientMdp::kFail;
        return m;
    }

    std::map<Region, int> intern;
    std::deque<int> work;

    auto state_for = [&](const Region& r) -> int {
        auto it = intern.find(r);
        if (it != intern.end()) return m.state_of(it->second);
        int idx = static_cast<int>(m.regions.size());
        intern.emplace(r, idx);
        m.regions.push_back(r);
        m.region_dbms.push_back(region_dbm(r, k));
        m.edges.emplace_back();
        work.push_back(idx);
        return m.state_of(idx);
    };

    m.initial = state_for(region_of(pta.initial, zero, k));

    while (!work.empty()) {
        int idx = work.front();
        work.pop_front();
        Region r = m.regions[static_cast<std::size_t>(idx)];
        Dbm rd = m.region_dbms[static_cast<std::size_t>(idx)];
        const Location& loc = pta.locations[static_cast<std::size_t>(r.location)];
        std::vector<QuotientMdp::Edge> out;

        // delay edges: the successor chain while the invariant holds
        Region cur = r;
        for (;;) {
            auto next = region_time_successor(cur, k);
            if (!next) break;
            Dbm nd = region_dbm(*next, k);
            if (!includes(loc.invariant.dbm(), nd)) break;
            out.push_back({m.tau_action, {{state_for(*next), Rational(1)}}});
            cur = *next;
        }

        // discrete action edges for transitions whose guard the region meets
        for (const auto& t : loc.transitions) {
            if (!includes(t.guard.dbm(), rd)) continue;
            std::map<int, Rational> dist;
            for (const auto& e : t.entries) {
                if (e.target == pta.fail) {
                    dist[QuotientMdp::kFail] += e.prob;
                    continue;
                }
                Region tgt = region_reset(r, e.resets, k, e.target);
                const Dbm& inv =
                    pta.locations[static_cast<std::size_t>(e.target)].invariant.dbm();
                if (!includes(inv, region_dbm(tgt, k))) {
                    dist[QuotientMdp::kFail] += e.prob; // relaxed well-formedness
                } else if (e.target == pta.goal) {
                    dist[QuotientMdp::kGoal] += e.prob;
                } else {
                    dist[state_for(tgt)] += e.prob;
                }
            }
            QuotientMdp::Edge edge;
            edge.action = t.action;
            for (auto& [s, p] : dist) edge.dist.emplace_back(s, p);
            out.push_back(std::move(edge));
        }

        if (out.empty()) // deadlock region: neither delay nor action available
            out.push_back({m.dead_action, {{QuotientMdp::kFail, Rational(1)}}});
        m.edges[static_cast<std::size_t>(idx)] = std::move(out);
    }
    return m;
}

ProceedCheck check_proceed_assumption(const QuotientMdp& m) {
    // greatest fixpoint of "has an edge whose support stays in the set"
    std::vector<char> in(static_cast<std::size_t>(m.num_region_states()), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < m.num_region_states(); ++i) {
            if (!in[static_cast<std::size_t>(i)]) continue;
            bool can_stay = false;
            for (const auto& e : m.edges[static_cast<std::size_t>(i)]) {
                bool stays = true;
                for (const auto& [s, p] : e.dist) {
                    if (!m.is_region_state(s) || !in[static_cast<std::size_t>(m.region_index(s))]) {
                        stays = false;
                        break;
                    }
                }
                if (stays) {
                    can_stay = true;
                    break;
                }
            }
            if (!can_stay) {
                in[static_cast<std::size_t>(i)] = 0;
                changed = true;
            }
        }
    }
    ProceedCheck out{true, {}};
    for (int i = 0; i < m.num_region_states(); ++i)
        if (in[static_cast<std::size_t>(i)]) {
            out.ok = false;
            out.offending.push_back(m.state_of(i));
        }
    return out;
}

std::string quotient_to_dot(const QuotientMdp& m) {
    std::ostringstream out;
    out << "digraph quotient {\n  rankdir=LR;\n  node [shape=box];\n";
    out << "  goal [shape=doublecircle];\n  fail [shape=doublecircle];\n";
    auto node = [&](int s) -> std::string {
        if (s == QuotientMdp::kGoal) return "goal";
        if (s == QuotientMdp::kFail) return "fail";
        return "s" + std::to_string(s);
    };
    for (int i = 0; i < m.num_region_states(); ++i) {
        int s = m.state_of(i);
        out << "  " << node(s) << " [label=\"" << m.state_label(s) << "\"";
        if (s == m.initial) out << ", penwidth=2";
        out << "];\n";
    }
    for (int i = 0; i < m.num_region_states(); ++i) {
        int s = m.state_of(i);
        for (const auto& e : m.edges[static_cast<std::size_t>(i)]) {
            bool tau = e.action == m.tau_action;
            for (const auto& [t, p] : e.dist) {
                out << "  " << node(s) << " -> " << node(t) << " [label=\""
                    << m.action_name(e.action);
                if (!tau) out << " " << to_fraction_string(p);
                out << "\"" << (tau ? ", style=dashed" : "") << "];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace ptawit
