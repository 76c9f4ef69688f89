#include "ptawit/minwit.hpp"

#include "ptawit/error.hpp"
#include "ptawit/lp.hpp"
#include "ptawit/volume.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace ptawit {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

// Ladder position of a bound for the INV encoding: position p in {0..4K}
// stands for the bound (ceil((p-2K)/2), < when p-2K is odd, <= when even).
// Entries beyond the top rung (a > K or +inf) clamp to 4K; entries below
// the bottom rung return -1 (no constraint needed).
int ladder_position(const Bound& b, std::int64_t k) {
    if (b.is_pos_inf()) return static_cast<int>(4 * k);
    std::int64_t pos =
        b.is_strict() ? 2 * b.value() - 1 + 2 * k : 2 * b.value() + 2 * k;
    if (pos < 0) return -1;
    if (pos > 4 * k) return static_cast<int>(4 * k);
    return static_cast<int>(pos);
}

// Shared scaffolding of the certificate polytopes with per-location or
// per-(location, clock pair) forcing variables.
struct MilpBuilder {
    const Pta& pta;
    const QuotientMdp& m;
    FarkasSystem farkas;
    LinearProgram lp;
    Direction dir;
    std::vector<int> zvar;   // Min: per region; Max: unused
    std::vector<int> yvar;   // Max: per Farkas row
    Rational big_m;          // Max: aggregate visit-count bound

    MilpBuilder(const Pta& p, const QuotientMdp& mdp, const Rational& lambda, Direction d)
        : pta(p), m(mdp), farkas(build_system(mdp)), dir(d) {
        if (farkas.initial_region < 0)
            raise(ErrorKind::Internal, "minimization on a degenerate initial state");
        if (dir == Direction::Min) {
            zvar.resize(static_cast<std::size_t>(farkas.num_regions));
            for (int i = 0; i < farkas.num_regions; ++i)
                zvar[static_cast<std::size_t>(i)] = lp.add_var(
                    "z" + std::to_string(i),
                    i == farkas.initial_region ? lambda : Rational(0), Rational(1));
            for (std::size_t r = 0; r < farkas.rows.size(); ++r) {
                std::vector<LpTerm> terms;
                for (const auto& [col, a] : farkas.rows[r])
                    terms.push_back({zvar[static_cast<std::size_t>(col)], a});
                lp.add_row(std::move(terms), Rel::Le, farkas.b[r]);
            }
        } else {
            // pre-solve the aggregate visit bound: max sum(y) s.t. yA <= delta
            big_m = presolve_big_m();
            yvar.resize(farkas.rows.size());
            for (std::size_t r = 0; r < farkas.rows.size(); ++r)
                yvar[r] = lp.add_var("y" + std::to_string(r), Rational(0), big_m);
            std::vector<std::vector<LpTerm>> cols(
                static_cast<std::size_t>(farkas.num_regions));
            for (std::size_t r = 0; r < farkas.rows.size(); ++r)
                for (const auto& [col, a] : farkas.rows[r])
                    cols[static_cast<std::size_t>(col)].push_back({yvar[r], a});
            for (int s = 0; s < farkas.num_regions; ++s)
                lp.add_row(cols[static_cast<std::size_t>(s)], Rel::Le,
                           s == farkas.initial_region ? Rational(1) : Rational(0));
            std::vector<LpTerm> yb;
            for (std::size_t r = 0; r < farkas.rows.size(); ++r)
                if (farkas.b[r] != 0) yb.push_back({yvar[r], farkas.b[r]});
            lp.add_row(std::move(yb), Rel::Ge, lambda);
        }
    }

    Rational presolve_big_m() {
        LinearProgram pre;
        for (std::size_t r = 0; r < farkas.rows.size(); ++r)
            pre.add_var("y" + std::to_string(r), Rational(0), std::nullopt);
        std::vector<std::vector<LpTerm>> cols(static_cast<std::size_t>(farkas.num_regions));
        for (std::size_t r = 0; r < farkas.rows.size(); ++r)
            for (const auto& [col, a] : farkas.rows[r])
                cols[static_cast<std::size_t>(col)].push_back({static_cast<int>(r), a});
        for (int s = 0; s < farkas.num_regions; ++s)
            pre.add_row(cols[static_cast<std::size_t>(s)], Rel::Le,
                        s == farkas.initial_region ? Rational(1) : Rational(0));
        std::vector<LpTerm> all;
        for (std::size_t r = 0; r < farkas.rows.size(); ++r)
            all.push_back({static_cast<int>(r), Rational(1)});
        pre.set_objective(Sense::Maximize, all);
        Solution s = solve_lp(pre);
        if (!s.optimal())
            raise(ErrorKind::Internal, "big-M pre-solve failed (proceed assumption?)");
        return s.objective;
    }

    // One forcing row per region state against the given binary variable:
    // Min: z(s) <= bin;  Max: sum_e y(s,e) <= big_m * bin.
    void link_state(int region, int bin_var) {
        if (dir == Direction::Min) {
            lp.add_row({{zvar[static_cast<std::size_t>(region)], Rational(1)},
                        {bin_var, Rational(-1)}},
                       Rel::Le, Rational(0));
        } else {
            std::vector<LpTerm> terms;
            for (std::size_t r = 0; r < farkas.rows.size(); ++r)
                if (farkas.row_refs[r].region == region)
                    terms.push_back({yvar[r], Rational(1)});
            terms.push_back({bin_var, -big_m});
            lp.add_row(std::move(terms), Rel::Le, Rational(0));
        }
    }

    // Region support of a MILP solution.
    std::vector<int> decode_support(const Solution& sol) const {
        std::set<int> support;
        if (dir == Direction::Min) {
            for (int i = 0; i < farkas.num_regions; ++i)
                if (sol.values[static_cast<std::size_t>(zvar[static_cast<std::size_t>(i)])] > 0)
                    support.insert(i);
        } else {
            for (std::size_t r = 0; r < farkas.rows.size(); ++r)
                if (sol.values[static_cast<std::size_t>(yvar[r])] > 0)
                    support.insert(farkas.row_refs[r].region);
        }
        return std::vector<int>(support.begin(), support.end());
    }
};

Witness decode_witness(const Pta& pta, const QuotientMdp& m, const Rational& lambda,
                       Direction dir, const std::vector<int>& support) {
    WitnessStrength kind =
        dir == Direction::Min ? WitnessStrength::Strong : WitnessStrength::Weak;
    std::vector<int> regions = support;
    if (regions.empty() && m.is_region_state(m.initial))
        regions.push_back(m.region_index(m.initial)); // degenerate lambda = 0
    Witness w = induce_subsystem(pta, m, regions, kind);
    w.direction = dir;
    VerifyResult v = verify_witness(pta, w, lambda, m.k);
    if (!v.ok)
        raise(ErrorKind::Internal, "decoded witness failed verification: " + v.reason);
    w.verified_threshold = lambda;
    return w;
}

// Degenerate models whose initial location is already goal or fail.
MinimizationReport degenerate_report(const Pta& pta, const QuotientMdp& m, Notion notion,
                                     const Rational& lambda, Direction dir) {
    Rational value = m.initial == QuotientMdp::kGoal ? Rational(1) : Rational(0);
    if (lambda > value)
        raise(ErrorKind::Infeasible, "threshold exceeds the optimal probability");
    MinimizationReport rep;
    rep.notion = notion;
    rep.direction = dir;
    rep.lambda = lambda;
    rep.optimum = 0;
    Witness w;
    w.subsystem = prune_to_locations(pta, {pta.initial, pta.goal, pta.fail});
    w.strength = dir == Direction::Min ? WitnessStrength::Strong : WitnessStrength::Weak;
    w.direction = dir;
    w.verified_threshold = lambda;
    rep.witnesses.push_back(std::move(w));
    return rep;
}

// Binary variables per location (goal/fail excluded), linked to every
// region state of that location.
struct LocVars {
    std::vector<int> zeta;        // per pta location, -1 for goal/fail
    std::vector<int> loc_of_zeta; // reverse map
};

LocVars add_loc_binaries(MilpBuilder& builder) {
    LocVars lv;
    const Pta& pta = builder.pta;
    lv.zeta.assign(pta.locations.size(), -1);
    for (std::size_t l = 0; l < pta.locations.size(); ++l) {
        if (static_cast<int>(l) == pta.goal || static_cast<int>(l) == pta.fail) continue;
        lv.zeta[l] = builder.lp.add_binary("zeta_" + pta.locations[l].name);
        lv.loc_of_zeta.push_back(static_cast<int>(l));
    }
    for (int i = 0; i < builder.farkas.num_regions; ++i) {
        int l = builder.m.regions[static_cast<std::size_t>(i)].location;
        builder.link_state(i, lv.zeta[static_cast<std::size_t>(l)]);
    }
    std::vector<LpTerm> obj;
    for (std::size_t l = 0; l < lv.zeta.size(); ++l)
        if (lv.zeta[l] >= 0) obj.push_back({lv.zeta[l], Rational(1)});
    builder.lp.set_objective(Sense::Minimize, obj);
    return lv;
}

} // namespace

MinimizationReport minimize_loc(const Pta& pta, const QuotientMdp& m, const Rational& lambda,
                                Direction dir, bool enumerate_all) {
    auto start = Clock::now();
    if (!m.is_region_state(m.initial))
        return degenerate_report(pta, m, Notion::Loc, lambda, dir);

    MilpBuilder builder(pta, m, lambda, dir);
    LocVars lv = add_loc_binaries(builder);

    Solution sol = solve_milp(builder.lp);
    if (!sol.optimal())
        raise(ErrorKind::Infeasible, "threshold exceeds the optimal probability");

    MinimizationReport rep;
    rep.notion = Notion::Loc;
    rep.direction = dir;
    rep.lambda = lambda;
    rep.optimum = sol.objective;
    rep.witnesses.push_back(decode_witness(pta, m, lambda, dir, builder.decode_support(sol)));

    if (enumerate_all) {
        // every optimal location support, via no-good cuts on the zeta sets
        LinearProgram enumerator = builder.lp;
        std::vector<LpTerm> all;
        for (std::size_t l = 0; l < lv.zeta.size(); ++l)
            if (lv.zeta[l] >= 0) all.push_back({lv.zeta[l], Rational(1)});
        enumerator.add_row(all, Rel::Le, sol.objective);
        Solution cur = sol;
        bool first = true;
        for (;;) {
            std::vector<LpTerm> cut;
            int cut_size = 0;
            for (std::size_t l = 0; l < lv.zeta.size(); ++l)
                if (lv.zeta[l] >= 0 && cur.values[static_cast<std::size_t>(lv.zeta[l])] > 0) {
                    cut.push_back({lv.zeta[l], Rational(1)});
                    ++cut_size;
                }
            if (!first)
                rep.witnesses.push_back(
                    decode_witness(pta, m, lambda, dir, builder.decode_support(cur)));
            first = false;
            enumerator.add_row(cut, Rel::Le, Rational(cut_size - 1));
            Solution next = solve_milp(enumerator);
            if (!next.optimal()) break;
            cur = next;
        }
    }
    rep.milliseconds = ms_since(start);
    return rep;
}

namespace {

// xi variable block per (location, ordered clock pair with j != 0).
struct InvVars {
    // key: (location, i, j) -> 4K+1 variable ids, ladder-ordered
    std::map<std::tuple<int, int, int>, std::vector<int>> xi;
};

InvVars add_inv_binaries(MilpBuilder& builder) {
    InvVars iv;
    const Pta& pta = builder.pta;
    const QuotientMdp& m = builder.m;
    std::int64_t k = m.k;
    int rungs = static_cast<int>(4 * k) + 1;
    int n = pta.real_clocks();

    for (std::size_t l = 0; l < pta.locations.size(); ++l) {
        if (static_cast<int>(l) == pta.goal || static_cast<int>(l) == pta.fail) continue;
        for (int i = 0; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                std::vector<int> vars;
                for (int p = 0; p < rungs; ++p)
                    vars.push_back(builder.lp.add_binary(
                        "xi_" + pta.locations[l].name + "_" + std::to_string(i) + "_" +
                        std::to_string(j) + "_" + std::to_string(p)));
                for (int p = 1; p < rungs; ++p)
                    builder.lp.add_row({{vars[static_cast<std::size_t>(p)], Rational(1)},
                                        {vars[static_cast<std::size_t>(p - 1)], Rational(-1)}},
                                       Rel::Le, Rational(0));
                iv.xi[{static_cast<int>(l), i, j}] = std::move(vars);
            }
    }

    // forcing rows from the per-region canonical DBM entries
    for (int r = 0; r < builder.farkas.num_regions; ++r) {
        const Region& reg = m.regions[static_cast<std::size_t>(r)];
        const Dbm& rd = m.region_dbms[static_cast<std::size_t>(r)];
        for (int i = 0; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                int p = ladder_position(rd.at(i, j), k);
                if (p < 0) continue;
                builder.link_state(r, iv.xi[{reg.location, i, j}][static_cast<std::size_t>(p)]);
            }
    }

    std::vector<LpTerm> obj;
    for (const auto& [key, vars] : iv.xi)
        for (int v : vars) obj.push_back({v, Rational(1)});
    builder.lp.set_objective(Sense::Minimize, obj);
    return iv;
}

void require_bound_for_inv(const Pta& pta) {
    if (!pta.declared_bound && !pta.invariants_bounded())
        raise(ErrorKind::UnboundedInvariant,
              "inv/vol minimization requires bounded invariants or a declared bound");
}

void assert_step_chains(const InvVars& iv, const Solution& sol) {
    for (const auto& [key, vars] : iv.xi) {
        bool seen_zero = false;
        for (int v : vars) {
            bool one = sol.values[static_cast<std::size_t>(v)] == 1;
            if (one && seen_zero)
                raise(ErrorKind::Internal, "xi chain is not a step vector");
            if (!one) seen_zero = true;
        }
    }
}

} // namespace

MinimizationReport minimize_inv(const Pta& pta, const QuotientMdp& m, const Rational& lambda,
                                Direction dir) {
    auto start = Clock::now();
    require_bound_for_inv(pta);
    if (!m.is_region_state(m.initial))
        return degenerate_report(pta, m, Notion::Inv, lambda, dir);

    MilpBuilder builder(pta, m, lambda, dir);
    InvVars iv = add_inv_binaries(builder);

    Solution sol = solve_milp(builder.lp);
    if (!sol.optimal())
        raise(ErrorKind::Infeasible, "threshold exceeds the optimal probability");
    assert_step_chains(iv, sol);

    MinimizationReport rep;
    rep.notion = Notion::Inv;
    rep.direction = dir;
    rep.lambda = lambda;
    rep.optimum = sol.objective;
    rep.witnesses.push_back(decode_witness(pta, m, lambda, dir, builder.decode_support(sol)));
    rep.milliseconds = ms_since(start);
    return rep;
}

MinimizationReport minimize_vol(const Pta& pta, const QuotientMdp& m, const Rational& lambda,
                                Direction dir, int threads) {
    auto start = Clock::now();
    require_bound_for_inv(pta);
    if (!m.is_region_state(m.initial))
        return degenerate_report(pta, m, Notion::Vol, lambda, dir);

    MilpBuilder builder(pta, m, lambda, dir);
    InvVars iv = add_inv_binaries(builder);
    for (const auto& [key, vars] : iv.xi) {
        LpObjective o;
        o.sense = Sense::Minimize;
        for (int v : vars) o.terms.push_back({v, Rational(1)});
        builder.lp.objectives.push_back(std::move(o));
    }

    auto frontier = pareto_enumerate(builder.lp);
    if (frontier.empty())
        raise(ErrorKind::Infeasible, "threshold exceeds the optimal probability");

    MinimizationReport rep;
    rep.notion = Notion::Vol;
    rep.direction = dir;
    rep.lambda = lambda;
    rep.optimum_infinite = true;
    for (const auto& sol : frontier) {
        MinimizationReport::Candidate cand;
        cand.objective = sol.objective_values;
        cand.witness = decode_witness(pta, m, lambda, dir, builder.decode_support(sol));
        cand.volume = pta_volume(cand.witness.subsystem, threads);
        rep.candidates.push_back(std::move(cand));
    }
    for (const auto& c : rep.candidates) {
        bool better = rep.optimum_infinite
                          ? c.volume.finite
                          : (c.volume.finite && c.volume.value < rep.optimum);
        if (better) {
            rep.optimum_infinite = false;
            rep.optimum = c.volume.value;
        }
    }
    for (const auto& c : rep.candidates) {
        bool minimal = rep.optimum_infinite
                           ? true
                           : (c.volume.finite && c.volume.value == rep.optimum);
        if (minimal) rep.witnesses.push_back(c.witness);
    }
    rep.milliseconds = ms_since(start);
    return rep;
}

MinimizationReport qs_heuristic(const Pta& pta, const QuotientMdp& m, const Rational& lambda,
                                Direction dir, int iterations) {
    auto start = Clock::now();
    if (!m.is_region_state(m.initial))
        return degenerate_report(pta, m, Notion::Loc, lambda, dir);

    MilpBuilder builder(pta, m, lambda, dir);
    // continuous zeta in [0,1]
    const Pta& p = builder.pta;
    std::vector<int> zeta(p.locations.size(), -1);
    std::vector<int> locs;
    for (std::size_t l = 0; l < p.locations.size(); ++l) {
        if (static_cast<int>(l) == p.goal || static_cast<int>(l) == p.fail) continue;
        zeta[l] = builder.lp.add_var("zeta_" + p.locations[l].name, Rational(0), Rational(1),
                                     VarKind::Continuous);
        locs.push_back(static_cast<int>(l));
    }
    for (int i = 0; i < builder.farkas.num_regions; ++i) {
        int l = builder.m.regions[static_cast<std::size_t>(i)].location;
        builder.link_state(i, zeta[static_cast<std::size_t>(l)]);
    }

    const Rational cap(1'000'000);
    std::map<int, Rational> weight;
    for (int l : locs) weight[l] = 1;
    Solution sol;
    for (int it = 0; it < std::max(1, iterations); ++it) {
        std::vector<LpTerm> obj;
        for (int l : locs) obj.push_back({zeta[static_cast<std::size_t>(l)], weight[l]});
        builder.lp.set_objective(Sense::Minimize, obj);
        sol = solve_lp(builder.lp);
        if (!sol.optimal())
            raise(ErrorKind::Infeasible, "threshold exceeds the optimal probability");
        for (int l : locs) {
            const Rational& v = sol.values[static_cast<std::size_t>(zeta[static_cast<std::size_t>(l)])];
            weight[l] = v == 0 ? cap : 1 / v;
        }
    }

    MinimizationReport rep;
    rep.notion = Notion::Loc;
    rep.direction = dir;
    rep.lambda = lambda;
    rep.witnesses.push_back(decode_witness(pta, m, lambda, dir, builder.decode_support(sol)));
    std::set<std::string> names;
    for (std::size_t l = 0; l < rep.witnesses[0].subsystem.locations.size(); ++l)
        names.insert(rep.witnesses[0].subsystem.locations[l].name);
    rep.optimum = Rational(static_cast<long long>(names.size()) - 2); // minus goal/fail
    rep.milliseconds = ms_since(start);
    return rep;
}

bool leq_loc(const Pta& a, const Pta& b) { return a.locations.size() <= b.locations.size(); }

bool leq_inv(const Pta& a, const Pta& b) {
    for (const auto& la : a.locations) {
        int lb = b.find_location(la.name);
        if (lb < 0) return false;
        if (!includes(b.locations[static_cast<std::size_t>(lb)].invariant.dbm(),
                      la.invariant.dbm()))
            return false;
    }
    return true;
}

bool leq_vol(const Pta& a, const Pta& b) {
    PtaVolume va = pta_volume(a);
    PtaVolume vb = pta_volume(b);
    if (!vb.finite) return true;
    if (!va.finite) return false;
    return va.value <= vb.value;
}

Rational witness_xi_sum(const Pta& witness, std::int64_t k) {
    Rational sum(0);
    int n = witness.real_clocks();
    for (std::size_t l = 0; l < witness.locations.size(); ++l) {
        if (static_cast<int>(l) == witness.goal || static_cast<int>(l) == witness.fail)
            continue;
        const Dbm& d = witness.locations[l].invariant.dbm();
        if (d.is_empty()) continue;
        for (int i = 0; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                int p = ladder_position(d.at(i, j), k);
                sum += p + 1; // rungs dominated by the entry
            }
    }
    return sum;
}

} // namespace ptawit
