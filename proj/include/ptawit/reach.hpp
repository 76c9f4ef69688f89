#pragma once

#include "ptawit/pta.hpp"
#include "ptawit/quotient.hpp"

#include <string>
#include <vector>

namespace ptawit {

// Exact min/max reachability probabilities of goal on a quotient MDP.
// Qualitative graph fixpoints resolve the probability-0/1 states first; the
// remaining values come from one exact LP (least fixpoint for max, greatest
// for min), so no iteration-convergence argument is ever needed.
struct ReachResult {
    Direction direction;
    std::vector<Rational> values; // per quotient state
    std::vector<char> prob0;      // resolved by graph precomputation
    std::vector<char> prob1;
    std::string method;

    const Rational& initial_value(const QuotientMdp& m) const {
        return values[static_cast<std::size_t>(m.initial)];
    }
};

// Throws AssumptionViolated when direction is Min and the proceed assumption
// fails on m.
ReachResult reach_prob(const QuotientMdp& m, Direction dir);

struct VerifyResult {
    bool ok;
    std::string reason;      // failed Def-2 clause or threshold message
    Rational probability;    // reachability of the witness subsystem
    explicit operator bool() const { return ok; }
};

// Structural check (strong for Min) plus exact threshold comparison of the
// witness subsystem's own quotient, built with the same clock bound k.
VerifyResult verify_witness(const Pta& original, const Witness& witness,
                            const Rational& lambda, std::int64_t k);

} // namespace ptawit
