#include "ptawit/lp.hpp"

#include "ptawit/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace ptawit {

int LinearProgram::add_var(const std::string& name, const Rational& lo,
                           std::optional<Rational> hi, VarKind kind) {
    if (hi && *hi < lo)
        raise(ErrorKind::Internal, "add_var: empty bound interval for " + name);
    vars.push_back(LpVar{name, lo, std::move(hi), kind});
    return static_cast<int>(vars.size()) - 1;
}

int LinearProgram::add_binary(const std::string& name) {
    return add_var(name, Rational(0), Rational(1), VarKind::Binary);
}

void LinearProgram::add_row(std::vector<LpTerm> terms, Rel rel, Rational rhs) {
    rows.push_back(LpRow{std::move(terms), rel, std::move(rhs)});
}

void LinearProgram::set_objective(Sense sense, std::vector<LpTerm> terms) {
    objective.sense = sense;
    objective.terms = std::move(terms);
}

std::string LinearProgram::to_lp_format() const {
    std::ostringstream out;
    auto write_terms = [&](const std::vector<LpTerm>& ts) {
        if (ts.empty()) {
            out << "0 " << (vars.empty() ? "x0" : vars[0].name);
            return;
        }
        bool first = true;
        for (const auto& t : ts) {
            Rational c = t.coef;
            if (first) {
                if (c < 0) { out << "- "; c = -c; }
            } else {
                out << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            out << to_plain_string(c) << " " << vars[t.var].name;
            first = false;
        }
    };
    out << (objective.sense == Sense::Minimize ? "Minimize" : "Maximize") << "\n obj: ";
    write_terms(objective.terms);
    out << "\nSubject To\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << " c" << i << ": ";
        write_terms(rows[i].terms);
        switch (rows[i].rel) {
        case Rel::Le: out << " <= "; break;
        case Rel::Ge: out << " >= "; break;
        case Rel::Eq: out << " = "; break;
        }
        out << to_plain_string(rows[i].rhs) << "\n";
    }
    out << "Bounds\n";
    for (const auto& v : vars) {
        out << " " << to_plain_string(v.lo) << " <= " << v.name;
        if (v.hi) out << " <= " << to_plain_string(*v.hi);
        out << "\n";
    }
    bool any_bin = false;
    for (const auto& v : vars)
        if (v.kind == VarKind::Binary) {
            if (!any_bin) out << "Binaries\n";
            any_bin = true;
            out << " " << v.name << "\n";
        }
    out << "End\n";
    return out.str();
}

namespace {

// ── Sparse row vectors ──────────────────────────────────────────────────────

using SpVec = std::vector<std::pair<int, Rational>>; // sorted by column

const Rational* sp_get(const SpVec& v, int col) {
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    if (it != v.end() && it->first == col) return &it->second;
    return nullptr;
}

// target += c * src (exact; drops zero entries)
void sp_axpy(SpVec& target, const Rational& c, const SpVec& src) {
    if (c == 0 || src.empty()) return;
    SpVec out;
    out.reserve(target.size() + src.size());
    std::size_t a = 0, b = 0;
    while (a < target.size() || b < src.size()) {
        if (b >= src.size() || (a < target.size() && target[a].first < src[b].first)) {
            out.push_back(target[a++]);
        } else if (a >= target.size() || src[b].first < target[a].first) {
            out.emplace_back(src[b].first, c * src[b].second);
            ++b;
        } else {
            Rational val = target[a].second + c * src[b].second;
            if (val != 0) out.emplace_back(target[a].first, std::move(val));
            ++a;
            ++b;
        }
    }
    target = std::move(out);
}

void sp_scale(SpVec& v, const Rational& c) {
    for (auto& e : v) e.second *= c;
}

void sp_remove(SpVec& v, int col) {
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    if (it != v.end() && it->first == col) v.erase(it);
}

// ── Bounded-variable two-phase primal simplex ───────────────────────────────
//
// Internal form: every input row is normalized to  sum a_j x_j + s = rhs
// with a slack column per row (Le: s in [0,inf); Ge rows are negated first;
// Eq: s in [0,0]). Rows whose initial residual violates the slack bounds get
// a basic artificial column; phase 1 minimizes the artificial sum.

enum class VStat { Basic, AtLo, AtHi };

struct Simplex {
    int nstruct = 0;
    int ncols = 0;
    std::vector<Rational> lo;
    std::vector<Rational> hi; // meaningful iff hi_finite
    std::vector<char> hi_finite;
    std::vector<SpVec> rows;       // tableau rows, sorted sparse
    std::vector<Rational> rhs;     // transformed right-hand side per row
    std::vector<int> basis;        // row -> basic column
    std::vector<VStat> stat;       // column -> status
    std::vector<Rational> beta;    // row -> value of its basic variable
    SpVec zrow;                    // reduced costs of the current phase
    bool bland = false;
    long long stall = 0;
    int first_artificial = 0;

    bool fixed(int c) const { return hi_finite[c] && lo[c] == hi[c]; }

    Rational nb_value(int c) const { return stat[c] == VStat::AtHi ? hi[c] : lo[c]; }

    // Column extraction from the row-sparse tableau.
    void column(int c, std::vector<std::pair<int, Rational>>& out) const {
        out.clear();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational* p = sp_get(rows[i], c);
            if (p && *p != 0) out.emplace_back(static_cast<int>(i), *p);
        }
    }

    void build(const LinearProgram& lp) {
        nstruct = static_cast<int>(lp.vars.size());
        int m = static_cast<int>(lp.rows.size());
        lo.reserve(nstruct + 2 * m);
        for (const auto& v : lp.vars) {
            lo.push_back(v.lo);
            hi.push_back(v.hi ? *v.hi : Rational(0));
            hi_finite.push_back(v.hi ? 1 : 0);
            stat.push_back(VStat::AtLo);
        }
        ncols = nstruct;
        rows.resize(m);
        rhs.resize(m);
        basis.assign(m, -1);
        beta.assign(m, Rational(0));

        // slacks
        for (int i = 0; i < m; ++i) {
            const LpRow& r = lp.rows[i];
            bool negate = (r.rel == Rel::Ge);
            std::map<int, Rational> acc;
            for (const auto& t : r.terms) {
                if (t.var < 0 || t.var >= nstruct)
                    raise(ErrorKind::Internal, "row references unknown variable");
                acc[t.var] += negate ? -t.coef : t.coef;
            }
            SpVec row;
            for (auto& [c, v] : acc)
                if (v != 0) row.emplace_back(c, std::move(v));
            rhs[i] = negate ? -r.rhs : r.rhs;
            int slack = ncols++;
            lo.push_back(Rational(0));
            if (r.rel == Rel::Eq) {
                hi.push_back(Rational(0));
                hi_finite.push_back(1);
            } else {
                hi.push_back(Rational(0));
                hi_finite.push_back(0);
            }
            stat.push_back(VStat::AtLo);
            row.emplace_back(slack, Rational(1));
            rows[i] = std::move(row);
        }

        // residuals with every structural variable at its lower bound
        first_artificial = ncols;
        for (int i = 0; i < m; ++i) {
            Rational residual = rhs[i];
            for (const auto& [c, a] : rows[i]) {
                if (c >= nstruct) continue;
                if (lo[c] != 0) residual -= a * lo[c];
            }
            int slack = nstruct + i;
            bool slack_ok = hi_finite[slack] ? (residual >= lo[slack] && residual <= hi[slack])
                                             : (residual >= lo[slack]);
            if (slack_ok) {
                basis[i] = slack;
                stat[slack] = VStat::Basic;
                beta[i] = residual;
            } else {
                // basic artificial carrying |residual|
                int art = ncols++;
                lo.push_back(Rational(0));
                hi.push_back(Rational(0));
                hi_finite.push_back(0);
                stat.push_back(VStat::Basic);
                Rational coef = residual < 0 ? Rational(-1) : Rational(1);
                rows[i].emplace_back(art, coef);
                if (coef < 0) {
                    sp_scale(rows[i], Rational(-1));
                    rhs[i] = -rhs[i];
                }
                basis[i] = art;
                beta[i] = residual < 0 ? -residual : residual;
            }
        }
    }

    // zrow = cost - cost_B * T, plus tracking of basic costs.
    void install_objective(const SpVec& cost) {
        zrow = cost;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational* cb = sp_get(cost, basis[i]);
            if (cb && *cb != 0) sp_axpy(zrow, -*cb, rows[i]);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) sp_remove(zrow, basis[i]);
        bland = false;
        stall = 0;
    }

    // Entering column under the current rule; -1 when optimal.
    int pick_entering() const {
        int best = -1;
        const Rational* best_mag = nullptr;
        for (const auto& [c, d] : zrow) {
            if (stat[c] == VStat::Basic || fixed(c)) continue;
            bool eligible = (stat[c] == VStat::AtLo && d < 0) ||
                            (stat[c] == VStat::AtHi && d > 0);
            if (!eligible) continue;
            if (bland) return c; // zrow is column-sorted: first hit is smallest index
            if (best < 0) {
                best = c;
                best_mag = &d;
            } else {
                Rational a = d < 0 ? -d : d;
                Rational b = *best_mag < 0 ? -*best_mag : *best_mag;
                if (a > b) {
                    best = c;
                    best_mag = &d;
                }
            }
        }
        return best;
    }

    struct Ratio {
        Rational t;
        int row = -1;      // -1 = bound flip of entering variable
        bool to_upper = false; // leaving basic lands at its upper bound
    };

    // Minimal step for entering column e moving with direction dir (+1/-1).
    // Returns nullopt when the step is unbounded.
    std::optional<Ratio> ratio_test(int e, int dir,
                                    const std::vector<std::pair<int, Rational>>& col) const {
        std::optional<Ratio> best;
        if (hi_finite[e]) {
            best = Ratio{hi[e] - lo[e], -1, false};
        }
        for (const auto& [i, a] : col) {
            Rational rate = -Rational(dir) * a; // d(beta_i)/dt
            int b = basis[i];
            if (rate < 0) {
                Rational limit = (beta[i] - lo[b]) / -rate;
                if (!best || limit < best->t ||
                    (limit == best->t && best->row >= 0 && b < basis[best->row]))
                    best = Ratio{limit, i, false};
            } else if (rate > 0 && hi_finite[b]) {
                Rational limit = (hi[b] - beta[i]) / rate;
                if (!best || limit < best->t ||
                    (limit == best->t && best->row >= 0 && b < basis[best->row]))
                    best = Ratio{limit, i, true};
            }
        }
        return best;
    }

    void pivot(int e, int leave_row) {
        SpVec& prow = rows[leave_row];
        const Rational* pv = sp_get(prow, e);
        Rational inv = 1 / *pv;
        sp_scale(prow, inv);
        rhs[leave_row] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == leave_row) continue;
            const Rational* a = sp_get(rows[i], e);
            if (!a || *a == 0) continue;
            Rational f = -*a;
            rhs[i] += f * rhs[leave_row];
            sp_axpy(rows[i], f, prow);
        }
        const Rational* dz = sp_get(zrow, e);
        if (dz && *dz != 0) {
            Rational f = -*dz;
            sp_axpy(zrow, f, prow);
        }
    }

    // Runs the current phase to optimality. Returns false on unboundedness.
    bool optimize() {
        std::vector<std::pair<int, Rational>> col;
        while (true) {
            int e = pick_entering();
            if (e < 0) return true;
            int dir = stat[e] == VStat::AtLo ? 1 : -1;
            column(e, col);
            auto step = ratio_test(e, dir, col);
            if (!step) return false; // unbounded direction
            const Rational& t = step->t;

            if (t == 0) {
                ++stall;
                if (!bland && stall > 200) bland = true;
            } else {
                stall = 0;
            }

            if (step->row < 0) {
                // bound flip: entering travels to its other bound
                for (const auto& [i, a] : col)
                    beta[i] -= Rational(dir) * t * a;
                stat[e] = (dir == 1) ? VStat::AtHi : VStat::AtLo;
                continue;
            }

            int r = step->row;
            int leaving = basis[r];
            Rational enter_val = nb_value(e) + Rational(dir) * t;
            for (const auto& [i, a] : col) {
                if (i == r) continue;
                beta[i] -= Rational(dir) * t * a;
            }
            stat[leaving] = step->to_upper ? VStat::AtHi : VStat::AtLo;
            stat[e] = VStat::Basic;
            basis[r] = e;
            beta[r] = enter_val;
            pivot(e, r);
        }
    }

    Rational var_value(int c) const {
        if (stat[c] == VStat::Basic) {
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (basis[i] == c) return beta[i];
            raise(ErrorKind::Internal, "basic variable without a row");
        }
        return nb_value(c);
    }

    std::vector<Rational> struct_values() const {
        std::vector<Rational> out(static_cast<std::size_t>(nstruct));
        std::vector<int> row_of(ncols, -1);
        for (std::size_t i = 0; i < rows.size(); ++i) row_of[basis[i]] = static_cast<int>(i);
        for (int c = 0; c < nstruct; ++c)
            out[c] = stat[c] == VStat::Basic ? beta[row_of[c]] : nb_value(c);
        return out;
    }
};

SpVec objective_cost(const LinearProgram& lp, bool& flip) {
    std::map<int, Rational> acc;
    flip = lp.objective.sense == Sense::Maximize;
    for (const auto& t : lp.objective.terms)
        acc[t.var] += flip ? -t.coef : t.coef;
    SpVec cost;
    for (auto& [c, v] : acc)
        if (v != 0) cost.emplace_back(c, std::move(v));
    return cost;
}

} // namespace

Solution solve_lp(const LinearProgram& lp, bool want_certificates) {
    Simplex sx;
    sx.build(lp);

    // Phase 1: minimize the artificial sum (artificials are the columns from
    // first_artificial on; each has cost 1).
    bool need_phase1 = sx.first_artificial < sx.ncols;
    if (need_phase1) {
        SpVec cost;
        for (int c = sx.first_artificial; c < sx.ncols; ++c)
            cost.emplace_back(c, Rational(1));
        sx.install_objective(cost);
        sx.optimize(); // bounded below by 0, cannot be unbounded
        Rational infeas(0);
        for (int c = sx.first_artificial; c < sx.ncols; ++c)
            infeas += sx.var_value(c);
        if (infeas > 0) {
            Solution sol;
            sol.status = SolveStatus::Infeasible;
            if (want_certificates) {
                // Row multipliers from the phase-1 reduced costs on slacks
                // (y_i = d(slack_i), the sign of Ge rows restored): y >= 0 on
                // Le rows, y <= 0 on Ge, and min over the variable bounds of
                // sum_i y_i (a_i . x) exceeds sum_i y_i b_i.
                sol.farkas_multipliers.resize(lp.rows.size());
                for (std::size_t i = 0; i < lp.rows.size(); ++i) {
                    int slack = sx.nstruct + static_cast<int>(i);
                    const Rational* d = sp_get(sx.zrow, slack);
                    Rational y = d ? *d : Rational(0);
                    if (sx.stat[slack] == VStat::Basic) y = 0;
                    sol.farkas_multipliers[i] = lp.rows[i].rel == Rel::Ge ? -y : y;
                }
            }
            return sol;
        }
        // pin artificials at zero for phase 2
        for (int c = sx.first_artificial; c < sx.ncols; ++c) {
            sx.hi[c] = Rational(0);
            sx.hi_finite[c] = 1;
        }
    }

    bool flip = false;
    SpVec cost = objective_cost(lp, flip);
    sx.install_objective(cost);
    if (!sx.optimize()) {
        Solution sol;
        sol.status = SolveStatus::Unbounded;
        if (want_certificates) {
            // Improving ray: the entering direction that passed the ratio
            // test unboundedly. Recover it by one more scan.
            int e = sx.pick_entering();
            if (e >= 0) {
                std::vector<std::pair<int, Rational>> col;
                sx.column(e, col);
                int dir = sx.stat[e] == VStat::AtLo ? 1 : -1;
                sol.ray.assign(static_cast<std::size_t>(sx.nstruct), Rational(0));
                if (e < sx.nstruct) sol.ray[e] = Rational(dir);
                for (const auto& [i, a] : col) {
                    int b = sx.basis[i];
                    if (b < sx.nstruct) sol.ray[b] = -Rational(dir) * a;
                }
            }
        }
        return sol;
    }

    Solution sol;
    sol.status = SolveStatus::Optimal;
    sol.values = sx.struct_values();
    Rational obj(0);
    for (const auto& t : lp.objective.terms) obj += t.coef * sol.values[t.var];
    sol.objective = obj;
    return sol;
}

namespace {

long long milp_node_limit() {
    const char* env = std::getenv("PTAWIT_MILP_NODE_LIMIT");
    if (!env) return -1;
    return std::atoll(env);
}

bool is_integral(const Rational& r) { return denominator(r) == 1; }

// Most fractional binary: value closest to 1/2, ties by index.
int pick_branch_var(const LinearProgram& lp, const std::vector<Rational>& values) {
    int best = -1;
    Rational best_dist;
    for (std::size_t i = 0; i < lp.vars.size(); ++i) {
        if (lp.vars[i].kind != VarKind::Binary) continue;
        const Rational& v = values[i];
        if (is_integral(v)) continue;
        Rational dist = v - Rational(1, 2);
        if (dist < 0) dist = -dist;
        if (best < 0 || dist < best_dist) {
            best = static_cast<int>(i);
            best_dist = dist;
        }
    }
    return best;
}

} // namespace

Solution solve_milp(const LinearProgram& lp) {
    bool minimize = lp.objective.sense == Sense::Minimize;
    auto better = [&](const Rational& a, const Rational& b) {
        return minimize ? a < b : a > b;
    };

    std::optional<Solution> incumbent;
    long long limit = milp_node_limit();
    long long nodes = 0;

    // Root relaxation plus a deterministic rounding probe to seed the
    // incumbent: ceil every fractional binary and test feasibility.
    {
        Solution root = solve_lp(lp);
        if (root.status == SolveStatus::Infeasible) return root;
        if (root.status == SolveStatus::Unbounded) return root;
        bool frac = false;
        for (std::size_t i = 0; i < lp.vars.size(); ++i)
            if (lp.vars[i].kind == VarKind::Binary && !is_integral(root.values[i])) {
                frac = true;
                break;
            }
        if (!frac) return root;
        LinearProgram probe = lp;
        for (std::size_t i = 0; i < lp.vars.size(); ++i)
            if (lp.vars[i].kind == VarKind::Binary) {
                Rational v = root.values[i] > 0 ? Rational(1) : Rational(0);
                probe.vars[i].lo = v;
                probe.vars[i].hi = v;
            }
        Solution rounded = solve_lp(probe);
        if (rounded.optimal()) incumbent = rounded;
    }

    struct Node {
        std::vector<std::pair<int, int>> fixes; // (var, value)
    };
    std::vector<Node> stack;
    stack.push_back(Node{});

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        ++nodes;
        if (limit >= 0 && nodes > limit)
            raise(ErrorKind::Internal, "solve_milp: node limit exceeded");

        LinearProgram sub = lp;
        for (auto [v, val] : node.fixes) {
            sub.vars[v].lo = Rational(val);
            sub.vars[v].hi = Rational(val);
        }
        Solution rel = solve_lp(sub);
        if (rel.status == SolveStatus::Infeasible) continue;
        if (rel.status == SolveStatus::Unbounded) return rel; // relaxation cone is fixed
        if (incumbent && !better(rel.objective, incumbent->objective)) continue;

        int bv = pick_branch_var(lp, rel.values);
        if (bv < 0) {
            if (!incumbent || better(rel.objective, incumbent->objective)) incumbent = rel;
            continue;
        }
        // explore the 0-branch first (LIFO: push 1 then 0)
        Node one = node;
        one.fixes.emplace_back(bv, 1);
        Node zero = std::move(node);
        zero.fixes.emplace_back(bv, 0);
        stack.push_back(std::move(one));
        stack.push_back(std::move(zero));
    }

    if (!incumbent) {
        Solution sol;
        sol.status = SolveStatus::Infeasible;
        return sol;
    }
    return *incumbent;
}

namespace {

Rational eval_terms(const std::vector<LpTerm>& terms, const std::vector<Rational>& values) {
    Rational out(0);
    for (const auto& t : terms) out += t.coef * values[t.var];
    return out;
}

} // namespace

std::vector<Solution> pareto_enumerate(const LinearProgram& lp) {
    if (lp.objectives.empty())
        raise(ErrorKind::Internal, "pareto_enumerate: no objectives");
    for (const auto& o : lp.objectives)
        if (o.sense != Sense::Minimize)
            raise(ErrorKind::Internal, "pareto_enumerate: objectives must be minimized");

    std::size_t m = lp.objectives.size();
    if (m == 1) {
        LinearProgram single = lp;
        single.objective = lp.objectives[0];
        Solution s = solve_milp(single);
        if (!s.optimal()) return {};
        s.objective_values = {s.objective};
        return {s};
    }

    constexpr std::int64_t kNoCap = std::numeric_limits<std::int64_t>::max();

    // Subproblem: minimize the objective sum under per-objective caps. The
    // optimum of the capped sum is a globally Pareto-minimal vector.
    auto solve_capped = [&](const std::vector<std::int64_t>& caps,
                            std::optional<Rational> sum_bound) -> Solution {
        LinearProgram sub = lp;
        std::map<int, Rational> sum;
        for (const auto& o : lp.objectives)
            for (const auto& t : o.terms) sum[t.var] += t.coef;
        std::vector<LpTerm> sum_terms;
        for (auto& [v, c] : sum)
            if (c != 0) sum_terms.push_back({v, c});
        sub.set_objective(Sense::Minimize, sum_terms);
        for (std::size_t i = 0; i < m; ++i)
            if (caps[i] != kNoCap)
                sub.add_row(lp.objectives[i].terms, Rel::Le, Rational(caps[i]));
        (void)sum_bound;
        return solve_milp(sub);
    };

    std::vector<Solution> frontier;
    std::vector<std::vector<std::int64_t>> frontier_vectors;
    std::set<std::vector<std::int64_t>> visited;
    std::vector<std::vector<std::int64_t>> infeasible_caps;

    std::vector<std::vector<std::int64_t>> todo;
    todo.emplace_back(m, kNoCap);

    while (!todo.empty()) {
        std::vector<std::int64_t> caps = std::move(todo.back());
        todo.pop_back();
        if (visited.count(caps)) continue;
        visited.insert(caps);

        bool hopeless = false;
        for (const auto& bad : infeasible_caps) {
            bool within = true;
            for (std::size_t i = 0; i < m; ++i)
                if (caps[i] > bad[i]) { within = false; break; }
            if (within) { hopeless = true; break; }
        }
        if (hopeless) continue;

        Solution s = solve_capped(caps, std::nullopt);
        if (!s.optimal()) {
            infeasible_caps.push_back(caps);
            continue;
        }
        std::vector<std::int64_t> vec(m);
        s.objective_values.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            Rational v = eval_terms(lp.objectives[i].terms, s.values);
            if (!is_integral(v))
                raise(ErrorKind::Internal, "pareto_enumerate: non-integer objective value");
            vec[i] = static_cast<std::int64_t>(numerator(v));
            s.objective_values[i] = v;
        }

        bool known = false;
        for (const auto& f : frontier_vectors)
            if (f == vec) { known = true; break; }
        if (!known) {
            frontier.push_back(s);
            frontier_vectors.push_back(vec);
        }

        // Children: require strict improvement in one coordinate.
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::int64_t> child = caps;
            child[i] = vec[i] - 1;
            bool sane = true;
            // a cap below the objective's lower bound is hopeless
            Rational lb(0);
            for (const auto& t : lp.objectives[i].terms) {
                const LpVar& v = lp.vars[t.var];
                if (t.coef >= 0)
                    lb += t.coef * v.lo;
                else if (v.hi)
                    lb += t.coef * *v.hi;
                else
                    sane = false;
            }
            if (sane && Rational(child[i]) < lb) continue;
            todo.push_back(std::move(child));
        }
    }

    // The discovered vectors are Pareto-minimal by construction; keep a
    // deterministic order and double-check mutual non-domination.
    std::vector<std::size_t> order(frontier.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return frontier_vectors[a] < frontier_vectors[b];
    });
    std::vector<Solution> out;
    for (std::size_t idx : order) {
        bool dominated = false;
        for (std::size_t jdx = 0; jdx < frontier_vectors.size() && !dominated; ++jdx) {
            if (jdx == idx) continue;
            const auto& a = frontier_vectors[jdx];
            const auto& b = frontier_vectors[idx];
            bool le = true, lt = false;
            for (std::size_t i = 0; i < m; ++i) {
                if (a[i] > b[i]) { le = false; break; }
                if (a[i] < b[i]) lt = true;
            }
            dominated = le && lt;
        }
        if (!dominated) out.push_back(frontier[idx]);
    }
    return out;
}

} // namespace ptawit
