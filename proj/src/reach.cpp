#include "ptawit/reach.hpp"

#include "ptawit/error.hpp"
#include "ptawit/lp.hpp"

#include <algorithm>

namespace ptawit {

namespace {

// States with an edge into `targets` (graph predecessor step over all edges).
std::vector<char> backward_reach(const QuotientMdp& m, std::vector<char> reached) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < m.num_region_states(); ++i) {
            int s = m.state_of(i);
            if (reached[static_cast<std::size_t>(s)]) continue;
            for (const auto& e : m.edges[static_cast<std::size_t>(i)]) {
                for (const auto& [t, p] : e.dist)
                    if (reached[static_cast<std::size_t>(t)]) {
                        reached[static_cast<std::size_t>(s)] = 1;
                        changed = true;
                        break;
                    }
                if (reached[static_cast<std::size_t>(s)]) break;
            }
        }
    }
    return reached;
}

// Pr^max = 0: goal unreachable in the graph.
std::vector<char> prob0_max(const QuotientMdp& m) {
    std::vector<char> reach(static_cast<std::size_t>(m.num_states()), 0);
    reach[QuotientMdp::kGoal] = 1;
    reach = backward_reach(m, std::move(reach));
    std::vector<char> out(static_cast<std::size_t>(m.num_states()), 0);
    for (int s = 0; s < m.num_states(); ++s)
        out[static_cast<std::size_t>(s)] = !reach[static_cast<std::size_t>(s)];
    return out;
}

// Pr^max = 1: the standard two-level fixpoint (some scheduler stays inside a
// safe set while eventually hitting goal).
std::vector<char> prob1_max(const QuotientMdp& m) {
    std::vector<char> u(static_cast<std::size_t>(m.num_states()), 1);
    u[QuotientMdp::kFail] = 1; // pruned in the first round
    bool outer_changed = true;
    while (outer_changed) {
        std::vector<char> r(static_cast<std::size_t>(m.num_states()), 0);
        r[QuotientMdp::kGoal] = 1;
        bool inner_changed = true;
        while (inner_changed) {
            inner_changed = false;
            for (int i = 0; i < m.num_region_states(); ++i) {
                int s = m.state_of(i);
                if (r[static_cast<std::size_t>(s)] || !u[static_cast<std::size_t>(s)]) continue;
                for (const auto& e : m.edges[static_cast<std::size_t>(i)]) {
                    bool stays = true, hits = false;
                    for (const auto& [t, p] : e.dist) {
                        if (!u[static_cast<std::size_t>(t)]) stays = false;
                        if (r[static_cast<std::size_t>(t)]) hits = true;
                    }
                    if (stays && hits) {
                        r[static_cast<std::size_t>(s)] = 1;
                        inner_changed = true;
                        break;
                    }
                }
            }
        }
        outer_changed = false;
        for (int s = 0; s < m.num_states(); ++s)
            if (u[static_cast<std::size_t>(s)] && !r[static_cast<std::size_t>(s)]) {
                outer_changed = true;
                break;
            }
        u = std::move(r);
    }
    return u;
}

// Pr^min = 0: some scheduler avoids goal forever (greatest fixpoint of
// "an edge keeps all mass inside the avoiding set").
std::vector<char> prob0_min(const QuotientMdp& m) {
    std::vector<char> in(static_cast<std::size_t>(m.num_states()), 1);
    in[QuotientMdp::kGoal] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < m.num_region_states(); ++i) {
            int s = m.state_of(i);
            if (!in[static_cast<std::size_t>(s)]) continue;
            bool can_avoid = false;
            for (const auto& e : m.edges[static_cast<std::size_t>(i)]) {
                bool stays = true;
                for (const auto& [t, p] : e.dist)
                    if (!in[static_cast<std::size_t>(t)]) {
                        stays = false;
                        break;
                    }
                if (stays) {
                    can_avoid = true;
                    break;
                }
            }
            if (!can_avoid) {
                in[static_cast<std::size_t>(s)] = 0;
                changed = true;
            }
        }
    }
    return in; // fail keeps its self-loop and stays in
}

// Pr^min = 1: no path reaches the Pr^min = 0 set.
std::vector<char> prob1_min(const QuotientMdp& m, const std::vector<char>& p0) {
    std::vector<char> reach_p0 = backward_reach(m, p0);
    std::vector<char> out(static_cast<std::size_t>(m.num_states()), 0);
    for (int s = 0; s < m.num_states(); ++s)
        out[static_cast<std::size_t>(s)] = !reach_p0[static_cast<std::size_t>(s)];
    return out;
}

} // namespace

ReachResult reach_prob(const QuotientMdp& m, Direction dir) {
    if (dir == Direction::Min) {
        ProceedCheck pc = check_proceed_assumption(m);
        if (!pc.ok)
            raise(ErrorKind::AssumptionViolated,
                  "reach_prob: proceed assumption fails at " +
                      std::to_string(pc.offending.size()) + " state(s), e.g. " +
                      m.state_label(pc.offending.front()));
    }

    ReachResult out;
    out.direction = dir;
    out.values.assign(static_cast<std::size_t>(m.num_states()), Rational(0));
    out.values[QuotientMdp::kGoal] = 1;

    std::vector<char> p0, p1;
    if (dir == Direction::Max) {
        p0 = prob0_max(m);
        p1 = prob1_max(m);
    } else {
        p0 = prob0_min(m);
        p1 = prob1_min(m, p0);
    }
    out.prob0 = p0;
    out.prob1 = p1;
    out.method = "prob0/prob1 graph fixpoints + exact rational LP";

    for (int s = 2; s < m.num_states(); ++s)
        if (p1[static_cast<std::size_t>(s)]) out.values[static_cast<std::size_t>(s)] = 1;

    // LP over the unresolved states
    LinearProgram lp;
    std::vector<int> var(static_cast<std::size_t>(m.num_states()), -1);
    for (int s = 2; s < m.num_states(); ++s) {
        if (p0[static_cast<std::size_t>(s)] || p1[static_cast<std::size_t>(s)]) continue;
        var[static_cast<std::size_t>(s)] =
            lp.add_var("z" + std::to_string(s), Rational(0), Rational(1));
    }
    if (lp.vars.empty()) return out;

    std::vector<LpTerm> all;
    for (int s = 2; s < m.num_states(); ++s)
        if (var[static_cast<std::size_t>(s)] >= 0)
            all.push_back({var[static_cast<std::size_t>(s)], Rational(1)});

    for (int i = 0; i < m.num_region_states(); ++i) {
        int s = m.state_of(i);
        int v = var[static_cast<std::size_t>(s)];
        if (v < 0) continue;
        for (const auto& e : m.edges[static_cast<std::size_t>(i)]) {
            std::vector<LpTerm> terms;
            terms.push_back({v, Rational(1)});
            Rational constant(0);
            for (const auto& [t, p] : e.dist) {
                if (t == QuotientMdp::kGoal || p1[static_cast<std::size_t>(t)]) {
                    constant += p;
                } else if (t == QuotientMdp::kFail || p0[static_cast<std::size_t>(t)]) {
                    // contributes 0
                } else {
                    int tv = var[static_cast<std::size_t>(t)];
                    bool merged = false;
                    for (auto& term : terms)
                        if (term.var == tv) {
                            term.coef -= p;
                            merged = true;
                            break;
                        }
                    if (!merged) terms.push_back({tv, -p});
                }
            }
            lp.add_row(std::move(terms), dir == Direction::Max ? Rel::Ge : Rel::Le, constant);
        }
    }
    lp.set_objective(dir == Direction::Max ? Sense::Minimize : Sense::Maximize, all);
    Solution sol = solve_lp(lp);
    if (!sol.optimal())
        raise(ErrorKind::Internal, "reach_prob: value LP not optimal");
    for (int s = 2; s < m.num_states(); ++s)
        if (var[static_cast<std::size_t>(s)] >= 0)
            out.values[static_cast<std::size_t>(s)] =
                sol.values[static_cast<std::size_t>(var[static_cast<std::size_t>(s)])];
    return out;
}

VerifyResult verify_witness(const Pta& original, const Witness& witness,
                            const Rational& lambda, std::int64_t k) {
    SubsystemCheck chk = witness.direction == Direction::Min
                             ? is_strong_subsystem(original, witness.subsystem)
                             : is_subsystem(original, witness.subsystem);
    if (!chk)
        return VerifyResult{false,
                            std::string(witness.direction == Direction::Min
                                            ? "not a strong subsystem: "
                                            : "not a subsystem: ") +
                                chk.reason,
                            Rational(0)};
    QuotientMdp qm = build_quotient(witness.subsystem, k);
    ReachResult r = reach_prob(qm, witness.direction);
    Rational p = r.initial_value(qm);
    if (p < lambda)
        return VerifyResult{false,
                            "probability " + to_fraction_string(p) + " below threshold " +
                                to_fraction_string(lambda),
                            p};
    return VerifyResult{true, "", p};
}

} // namespace ptawit
