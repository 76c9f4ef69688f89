#pragma once

#include "ptawit/farkas.hpp"
#include "ptawit/quotient.hpp"
#include "ptawit/reach.hpp"

#include <string>
#include <vector>

namespace ptawit {

enum class Notion { Loc, Inv, Vol };

// Result of one minimization run. `optimum` is the location count (loc),
// the xi-sum (inv), or the exact minimal volume (vol; infinite when every
// candidate is unbounded). Every reported witness has been re-verified.
struct MinimizationReport {
    Notion notion;
    Direction direction;
    Rational lambda;
    Rational optimum;
    bool optimum_infinite = false;
    std::vector<Witness> witnesses;

    struct Candidate {
        std::vector<Rational> objective; // INV-MO objective vector
        Witness witness;
        PtaVolume volume;
    };
    std::vector<Candidate> candidates; // full Pareto ledger (vol only)

    long long milliseconds = 0;
};

// LOC-MILP: minimize the number of kept locations (excluding goal/fail)
// subject to a certificate existing on the kept states. With enumerate_all
// the complete set of optimal location supports is produced via no-good
// cuts. Throws Infeasible when lambda exceeds the optimal probability and
// AssumptionViolated when the proceed assumption fails.
MinimizationReport minimize_loc(const Pta& pta, const QuotientMdp& m, const Rational& lambda,
                                Direction dir, bool enumerate_all = false);

// INV-MILP: minimize the total invariant-strength ladder sum over the
// binary variables xi^l_ij(k), k in {-2K..2K}, for ordered clock pairs with
// j != 0. Witnesses decode through the certificate support, never through
// xi. Requires a declared clock bound when invariants are unbounded.
MinimizationReport minimize_inv(const Pta& pta, const QuotientMdp& m, const Rational& lambda,
                                Direction dir);

// INV-MO + volume scan: enumerate the Pareto frontier of per-(l,i,j)
// ladder sums, decode one witness per frontier point, compare exact
// volumes. The report carries the full candidate ledger.
MinimizationReport minimize_vol(const Pta& pta, const QuotientMdp& m, const Rational& lambda,
                                Direction dir, int threads = 1);

// Quotient-sum heuristic: iterate LPs over LOC-CONSTR with continuous
// zeta, re-weighting by the inverse of the last optimum (capped at 10^6 for
// zeros). Returns a valid, not necessarily minimal, witness.
MinimizationReport qs_heuristic(const Pta& pta, const QuotientMdp& m, const Rational& lambda,
                                Direction dir, int iterations);

// The three minimality orders on subsystems of a common PTA.
bool leq_loc(const Pta& a, const Pta& b);
bool leq_inv(const Pta& a, const Pta& b);
bool leq_vol(const Pta& a, const Pta& b);

// Invariant-strength ladder sum of a witness: for each location and ordered
// clock pair (i, j != 0), the number of ladder bounds (a,<)/(a,<=) with
// |a| <= K that the invariant entry dominates. The INV-MILP objective equals
// this sum on its decoded witness.
Rational witness_xi_sum(const Pta& witness, std::int64_t k);

} // namespace ptawit
