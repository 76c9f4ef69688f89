#include "ptawit/farkas.hpp"

#include "ptawit/error.hpp"
#include "ptawit/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ptawit {

FarkasSystem build_system(const QuotientMdp& m) {
    ProceedCheck pc = check_proceed_assumption(m);
    if (!pc.ok)
        raise(ErrorKind::AssumptionViolated,
              "build_system: proceed assumption fails at " +
                  std::to_string(pc.offending.size()) + " state(s)");
    FarkasSystem f;
    f.num_regions = m.num_region_states();
    f.initial_region = m.is_region_state(m.initial) ? m.region_index(m.initial) : -1;
    for (int i = 0; i < m.num_region_states(); ++i) {
        const auto& edges = m.edges[static_cast<std::size_t>(i)];
        for (std::size_t e = 0; e < edges.size(); ++e) {
            std::map<int, Rational> row;
            Rational goal_mass(0);
            row[i] += 1;
            for (const auto& [t, p] : edges[e].dist) {
                if (t == QuotientMdp::kGoal)
                    goal_mass += p;
                else if (m.is_region_state(t))
                    row[m.region_index(t)] -= p;
            }
            std::vector<std::pair<int, Rational>> sparse;
            for (auto& [col, v] : row)
                if (v != 0) sparse.emplace_back(col, std::move(v));
            f.row_refs.push_back({i, static_cast<int>(e)});
            f.rows.push_back(std::move(sparse));
            f.b.push_back(goal_mass);
        }
    }
    return f;
}

bool is_certificate(const FarkasSystem& f, const Certificate& c) {
    if (c.direction == Direction::Min) {
        if (static_cast<int>(c.vec.size()) != f.num_regions)
            raise(ErrorKind::DimensionMismatch, "certificate length != |S|");
        for (const auto& v : c.vec)
            if (v < 0) return false;
        for (std::size_t r = 0; r < f.rows.size(); ++r) {
            Rational lhs(0);
            for (const auto& [col, a] : f.rows[r])
                lhs += a * c.vec[static_cast<std::size_t>(col)];
            if (lhs > f.b[r]) return false;
        }
        if (f.initial_region < 0) return c.lambda <= 0;
        return c.vec[static_cast<std::size_t>(f.initial_region)] >= c.lambda;
    }
    if (c.vec.size() != f.rows.size())
        raise(ErrorKind::DimensionMismatch, "certificate length != #rows");
    for (const auto& v : c.vec)
        if (v < 0) return false;
    std::vector<Rational> combo(static_cast<std::size_t>(f.num_regions), Rational(0));
    Rational value(0);
    for (std::size_t r = 0; r < f.rows.size(); ++r) {
        for (const auto& [col, a] : f.rows[r])
            combo[static_cast<std::size_t>(col)] += c.vec[r] * a;
        value += c.vec[r] * f.b[r];
    }
    for (int s = 0; s < f.num_regions; ++s) {
        Rational delta = (s == f.initial_region) ? Rational(1) : Rational(0);
        if (combo[static_cast<std::size_t>(s)] > delta) return false;
    }
    return value >= c.lambda;
}

std::vector<int> certificate_support(const FarkasSystem& f, const Certificate& c) {
    std::set<int> support;
    if (c.direction == Direction::Min) {
        for (std::size_t i = 0; i < c.vec.size(); ++i)
            if (c.vec[i] > 0) support.insert(static_cast<int>(i));
    } else {
        for (std::size_t r = 0; r < c.vec.size(); ++r)
            if (c.vec[r] > 0) support.insert(f.row_refs[r].region);
    }
    return std::vector<int>(support.begin(), support.end());
}

Witness induce_subsystem(const Pta& pta, const QuotientMdp& m,
                         const std::vector<int>& support_regions, WitnessStrength kind) {
    if (support_regions.empty())
        raise(ErrorKind::EmptySupport, "induce_subsystem: empty region set");

    std::set<int> support(support_regions.begin(), support_regions.end());
    bool initial_in_support = true;
    if (m.is_region_state(m.initial) && !support.count(m.region_index(m.initial))) {
        support.insert(m.region_index(m.initial));
        initial_in_support = false;
    }

    // interning map for membership tests of reset successors
    std::map<Region, int> intern;
    for (int i = 0; i < m.num_region_states(); ++i)
        intern.emplace(m.regions[static_cast<std::size_t>(i)], i);

    // group supporting regions by location
    std::map<int, std::vector<int>> by_location;
    for (int r : support)
        by_location[m.regions[static_cast<std::size_t>(r)].location].push_back(r);

    Pta out;
    out.clocks = pta.clocks;
    out.actions = pta.actions;
    out.declared_bound = pta.declared_bound;

    std::vector<int> remap(pta.locations.size(), -1);
    for (std::size_t li = 0; li < pta.locations.size(); ++li) {
        int l = static_cast<int>(li);
        bool keep = l == pta.goal || l == pta.fail || by_location.count(l);
        if (!keep) continue;
        remap[li] = static_cast<int>(out.locations.size());

        Location loc;
        loc.name = pta.locations[li].name;
        if (l == pta.goal || l == pta.fail) {
            loc.invariant = pta.locations[li].invariant;
            out.locations.push_back(std::move(loc));
            continue;
        }

        // inv^w = join of the supporting region zones; inv^s additionally
        // time-closed within the original invariant
        std::vector<Dbm> zones;
        for (int r : by_location[l])
            zones.push_back(m.region_dbms[static_cast<std::size_t>(r)]);
        Dbm weak_inv = canonical_dbm_of_union(zones);
        Dbm inv = kind == WitnessStrength::Strong
                      ? canonicalize(intersect(time_closure(weak_inv),
                                               pta.locations[li].invariant.dbm()))
                      : weak_inv;
        loc.invariant = ClockConstraint::from_dbm(inv);

        for (const auto& t : pta.locations[li].transitions) {
            Transition nt;
            nt.action = t.action;
            if (kind == WitnessStrength::Strong) {
                nt.guard = ClockConstraint::from_dbm(
                    canonicalize(intersect(t.guard.dbm(), inv)));
            } else {
                // g^w: join of the guard-satisfying supporting regions
                Dbm join = Dbm::empty(pta.real_clocks());
                for (int r : by_location[l]) {
                    const Dbm& rd = m.region_dbms[static_cast<std::size_t>(r)];
                    if (includes(t.guard.dbm(), rd)) join = zone_closure(join, rd);
                }
                nt.guard = ClockConstraint::from_dbm(
                    canonicalize(intersect(t.guard.dbm(), join)));
            }

            // μ': keep (C, l') iff some supporting region reset-maps into the
            // support (goal counts as supported when its invariant admits the
            // reset valuation)
            std::vector<bool> drop;
            for (const auto& e : t.entries) {
                bool kept = false;
                if (e.target != pta.fail) {
                    for (int r : by_location[l]) {
                        Region tgt = region_reset(m.regions[static_cast<std::size_t>(r)],
                                                  e.resets, m.k, e.target);
                        Dbm tgt_dbm = region_dbm(tgt, m.k);
                        const Dbm& tinv =
                            pta.locations[static_cast<std::size_t>(e.target)].invariant.dbm();
                        if (!includes(tinv, tgt_dbm)) continue;
                        if (e.target == pta.goal) {
                            kept = true;
                        } else {
                            auto it = intern.find(tgt);
                            if (it != intern.end() && support.count(it->second)) kept = true;
                        }
                        if (kept) break;
                    }
                }
                drop.push_back(!kept);
            }
            nt.entries = t.entries;
            fold_fail_mass(pta, nt, drop);
            loc.transitions.push_back(std::move(nt));
        }
        out.locations.push_back(std::move(loc));
    }

    out.initial = remap[static_cast<std::size_t>(pta.initial)];
    out.goal = remap[static_cast<std::size_t>(pta.goal)];
    out.fail = remap[static_cast<std::size_t>(pta.fail)];
    for (auto& l : out.locations)
        for (auto& t : l.transitions)
            for (auto& e : t.entries) e.target = remap[static_cast<std::size_t>(e.target)];
    normalize_pta(out);

    Witness w;
    w.subsystem = std::move(out);
    w.strength = kind;
    w.direction = kind == WitnessStrength::Strong ? Direction::Min : Direction::Max;
    w.support = std::vector<int>(support.begin(), support.end());
    w.initial_in_support = initial_in_support;
    return w;
}

std::string certificate_to_string(const QuotientMdp& m, const FarkasSystem& f,
                                  const Certificate& c) {
    std::ostringstream out;
    out << (c.direction == Direction::Min ? "min" : "max") << "-certificate for lambda = "
        << to_fraction_string(c.lambda) << "\n";
    if (c.direction == Direction::Min) {
        for (std::size_t i = 0; i < c.vec.size(); ++i)
            if (c.vec[i] > 0)
                out << m.state_label(m.state_of(static_cast<int>(i))) << " = "
                    << to_fraction_string(c.vec[i]) << "\n";
    } else {
        for (std::size_t r = 0; r < c.vec.size(); ++r)
            if (c.vec[r] > 0)
                out << m.state_label(m.state_of(f.row_refs[r].region)) << " ["
                    << m.action_name(
                           m.edges[static_cast<std::size_t>(f.row_refs[r].region)]
                                  [static_cast<std::size_t>(f.row_refs[r].edge_index)]
                                      .action)
                    << "] = " << to_fraction_string(c.vec[r]) << "\n";
    }
    return out.str();
}

CertificateLp certificate_lp(const FarkasSystem& f, Direction dir,
                             const std::vector<char>* allowed_regions) {
    if (f.initial_region < 0)
        raise(ErrorKind::Internal, "certificate_lp: initial state is not a region");
    LinearProgram lp;
    CertificateLp out;
    if (dir == Direction::Min) {
        for (int i = 0; i < f.num_regions; ++i) {
            bool allowed = !allowed_regions || (*allowed_regions)[static_cast<std::size_t>(i)];
            lp.add_var("z" + std::to_string(i), Rational(0),
                       allowed ? std::optional<Rational>(Rational(1))
                               : std::optional<Rational>(Rational(0)));
        }
        for (std::size_t r = 0; r < f.rows.size(); ++r) {
            std::vector<LpTerm> terms;
            for (const auto& [col, a] : f.rows[r]) terms.push_back({col, a});
            lp.add_row(std::move(terms), Rel::Le, f.b[r]);
        }
        lp.set_objective(Sense::Maximize, {{f.initial_region, Rational(1)}});
        Solution s = solve_lp(lp);
        if (!s.optimal()) raise(ErrorKind::Internal, "certificate_lp: min LP not optimal");
        out.value = s.objective;
        out.certificate = Certificate{Direction::Min, s.values, s.objective};
        return out;
    }
    for (std::size_t r = 0; r < f.rows.size(); ++r) {
        bool allowed = !allowed_regions ||
                       (*allowed_regions)[static_cast<std::size_t>(f.row_refs[r].region)];
        lp.add_var("y" + std::to_string(r), Rational(0),
                   allowed ? std::nullopt : std::optional<Rational>(Rational(0)));
    }
    // columns of A become rows of the transposed system
    std::vector<std::vector<LpTerm>> cols(static_cast<std::size_t>(f.num_regions));
    for (std::size_t r = 0; r < f.rows.size(); ++r)
        for (const auto& [col, a] : f.rows[r])
            cols[static_cast<std::size_t>(col)].push_back({static_cast<int>(r), a});
    for (int s = 0; s < f.num_regions; ++s)
        lp.add_row(cols[static_cast<std::size_t>(s)], Rel::Le,
                   s == f.initial_region ? Rational(1) : Rational(0));
    std::vector<LpTerm> obj;
    for (std::size_t r = 0; r < f.rows.size(); ++r)
        if (f.b[r] != 0) obj.push_back({static_cast<int>(r), f.b[r]});
    lp.set_objective(Sense::Maximize, obj);
    Solution s = solve_lp(lp);
    if (!s.optimal()) raise(ErrorKind::Internal, "certificate_lp: max LP not optimal");
    out.value = s.objective;
    out.certificate = Certificate{Direction::Max, s.values, s.objective};
    return out;
}

} // namespace ptawit