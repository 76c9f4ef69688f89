#pragma once

#include "ptawit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ptawit {

enum class VarKind { Continuous, Binary };
enum class Rel { Le, Ge, Eq };
enum class Sense { Minimize, Maximize };
enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct LpTerm {
    int var;
    Rational coef;
};

struct LpRow {
    std::vector<LpTerm> terms;
    Rel rel;
    Rational rhs;
};

struct LpVar {
    std::string name;
    Rational lo;                 // finite lower bound (free variables unsupported)
    std::optional<Rational> hi;  // nullopt = +inf
    VarKind kind;
};

struct LpObjective {
    Sense sense = Sense::Minimize;
    std::vector<LpTerm> terms;
};

struct LinearProgram {
    std::vector<LpVar> vars;
    std::vector<LpRow> rows;
    LpObjective objective;
    std::vector<LpObjective> objectives; // multi-objective programs (pareto)

    int add_var(const std::string& name, const Rational& lo,
                std::optional<Rational> hi, VarKind kind = VarKind::Continuous);
    int add_binary(const std::string& name);
    void add_row(std::vector<LpTerm> terms, Rel rel, Rational rhs);
    void set_objective(Sense sense, std::vector<LpTerm> terms);

    // Debug dump in the common LP text format (never a runtime dependency).
    std::string to_lp_format() const;
};

struct Solution {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<Rational> values;           // one per variable when Optimal
    Rational objective;                     // objective value when Optimal
    std::vector<Rational> objective_values; // per-objective values (pareto)

    // Certificates, filled on request (solve_lp with want_certificates):
    // infeasible: row multipliers y with y >= 0 on Le rows, y <= 0 on Ge rows,
    // whose combination is violated by every point within the variable bounds;
    // unbounded: an improving ray over the variables.
    std::vector<Rational> farkas_multipliers;
    std::vector<Rational> ray;

    bool optimal() const { return status == SolveStatus::Optimal; }
};

// Exact rational simplex over the continuous relaxation (variable kinds are
// ignored, bounds are honored). Dantzig pricing with a permanent switch to
// Bland's rule once the objective stalls, so termination is guaranteed.
Solution solve_lp(const LinearProgram& lp, bool want_certificates = false);

// Exact branch-and-bound over the binary variables with LP relaxation
// bounds. Branching picks the most fractional binary (ties by variable
// index) and explores the 0-branch first. Deterministic. The environment
// variable PTAWIT_MILP_NODE_LIMIT caps the node count (throws on overflow).
Solution solve_milp(const LinearProgram& lp);

// Complete Pareto frontier of a multi-objective program whose objectives
// take finitely many integer values on the feasible set (all objectives
// minimized). Returns one solution per non-dominated objective vector,
// sorted lexicographically by objective vector.
std::vector<Solution> pareto_enumerate(const LinearProgram& lp);

} // namespace ptawit
