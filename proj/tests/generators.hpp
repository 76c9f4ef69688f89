#pragma once

// Random model generators shared by the parser, quotient, reach and
// acceptance suites. Deterministic given the caller's RNG.

#include "ptawit/parser.hpp"
#include "ptawit/pta.hpp"

#include <random>
#include <string>
#include <vector>

namespace testutil {

using namespace ptawit;

struct PtaGenOptions {
    int min_locations = 2; // besides goal/fail
    int max_locations = 4;
    int clocks = 2;
    std::int64_t k = 2;
    bool bounded_invariants = false; // force an upper bound K on every clock
    bool allow_diagonals = false;    // only sound together with bounded_invariants
};

inline Pta random_pta(std::mt19937_64& rng, const PtaGenOptions& opt = {}) {
    std::uniform_int_distribution<int> nloc(opt.min_locations, opt.max_locations);
    std::uniform_int_distribution<std::int64_t> constant(0, opt.k);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> d4(0, 3);

    Pta pta;
    for (int c = 0; c < opt.clocks; ++c) pta.clocks.push_back("c" + std::to_string(c + 1));
    pta.actions = {"a", "b"};
    pta.declared_bound = opt.k;
    int n = nloc(rng);

    for (int i = 0; i < n; ++i) {
        std::vector<ConstraintAtom> atoms;
        for (int c = 1; c <= opt.clocks; ++c) {
            if (opt.bounded_invariants) {
                atoms.push_back({c, 0, CmpOp::Le, constant(rng)});
            } else if (coin(rng)) {
                atoms.push_back({c, 0, coin(rng) ? CmpOp::Le : CmpOp::Lt, constant(rng)});
            }
        }
        if (opt.allow_diagonals && opt.clocks >= 2 && coin(rng))
            atoms.push_back({1, 2, coin(rng) ? CmpOp::Le : CmpOp::Lt,
                             constant(rng) - constant(rng)});
        // the initial location must contain the zero valuation
        if (i == 0)
            for (auto& a : atoms)
                if (a.op == CmpOp::Lt && a.value == 0) a.op = CmpOp::Le;
        ClockConstraint inv = ClockConstraint::from_atoms(opt.clocks, atoms);
        Valuation zero(opt.clocks);
        if (i == 0 && !satisfies(zero, inv.dbm())) inv = ClockConstraint::top(opt.clocks);
        pta.locations.push_back(Location{"l" + std::to_string(i), inv, {}});
    }
    pta.locations.push_back(Location{"goal", ClockConstraint::top(opt.clocks), {}});
    pta.locations.push_back(Location{"fail", ClockConstraint::top(opt.clocks), {}});
    pta.initial = 0;
    pta.goal = n;
    pta.fail = n + 1;

    std::uniform_int_distribution<int> target(0, n + 1);
    for (int i = 0; i < n; ++i) {
        int ntrans = 1 + coin(rng);
        for (int t = 0; t < ntrans; ++t) {
            Transition tr;
            std::vector<ConstraintAtom> gatoms;
            for (int c = 1; c <= opt.clocks && gatoms.empty(); ++c) {
                if (d4(rng) == 0) continue;
                if (coin(rng))
                    gatoms.push_back({c, 0, CmpOp::Ge, constant(rng)});
                else
                    gatoms.push_back({c, 0, CmpOp::Le, constant(rng)});
            }
            tr.guard = ClockConstraint::from_atoms(opt.clocks, gatoms);
            tr.action = t % 2;
            int branches = 1 + coin(rng);
            std::vector<Rational> probs;
            if (branches == 1)
                probs = {Rational(1)};
            else if (coin(rng))
                probs = {Rational(1, 2), Rational(1, 2)};
            else
                probs = {Rational(1, 3), Rational(2, 3)};
            std::map<std::pair<std::vector<int>, int>, Rational> dist;
            for (int br = 0; br < branches; ++br) {
                std::vector<int> resets;
                for (int c = 1; c <= opt.clocks; ++c)
                    if (d4(rng) == 0) resets.push_back(c);
                dist[{resets, target(rng)}] += probs[static_cast<std::size_t>(br)];
            }
            for (auto& [key, p] : dist)
                tr.entries.push_back(TransitionEntry{key.first, key.second, p});
            pta.locations[static_cast<std::size_t>(i)].transitions.push_back(std::move(tr));
        }
    }
    normalize_pta(pta);
    return pta;
}

#ifndef PTAWIT_FIXTURE_DIR
#define PTAWIT_FIXTURE_DIR "fixtures"
#endif

inline Pta parse_fixture(const std::string& name) {
    auto r = parse_pta_file(std::string(PTAWIT_FIXTURE_DIR) + "/" + name);
    if (!r.ok()) {
        std::string msg = "fixture " + name + " failed to parse:";
        for (const auto& e : r.errors) msg += "\n  " + e.str();
        throw std::runtime_error(msg);
    }
    return *r.pta;
}

} // namespace testutil
