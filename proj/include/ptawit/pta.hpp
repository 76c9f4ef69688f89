#pragma once

#include "ptawit/constraint.hpp"
#include "ptawit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ptawit {

// One (reset set, target) pair of a transition distribution with its
// probability. Resets are sorted 1-based clock indices.
struct TransitionEntry {
    std::vector<int> resets;
    int target;
    Rational prob;

    bool operator==(const TransitionEntry&) const = default;
};

struct Transition {
    ClockConstraint guard; // stored normalized: guard ⊓ inv(source)
    int action;
    std::vector<TransitionEntry> entries;

    bool operator==(const Transition&) const = default;
};

struct Location {
    std::string name;
    ClockConstraint invariant;
    std::vector<Transition> transitions;

    bool operator==(const Location&) const = default;
};

// A pointed PTA. Clock index 0 is the implicit zero clock; clocks[i] names
// clock i+1. goal and fail are absorbing (normalized to a single self-loop
// with a true guard).
struct Pta {
    std::vector<std::string> clocks;
    std::vector<std::string> actions;
    std::vector<Location> locations;
    int initial = -1;
    int goal = -1;
    int fail = -1;
    std::optional<std::int64_t> declared_bound;

    int real_clocks() const { return static_cast<int>(clocks.size()); }
    int find_location(const std::string& name) const;
    int find_action(const std::string& name) const;
    std::int64_t max_constant() const;
    // Declared bound when present, otherwise the largest constant (at least 1).
    std::int64_t effective_bound() const;
    // Every non-goal/fail invariant has finite upper bounds on all clocks.
    bool invariants_bounded() const;

    bool operator==(const Pta&) const = default;
};

// Renormalizes goal/fail to single true-guard self-loops (adding the "loop"
// action when needed) and intersects every guard with its source invariant.
// Each parsed or constructed Pta passes through this before use.
void normalize_pta(Pta& pta);

enum class Direction { Min, Max };
enum class WitnessStrength { Weak, Strong };

// A witnessing subsystem with its provenance: the supporting region set of
// the quotient it was induced from and the threshold it was verified at.
struct Witness {
    Pta subsystem;
    WitnessStrength strength = WitnessStrength::Weak;
    Direction direction = Direction::Max;
    std::vector<int> support; // region indices in the originating quotient
    Rational verified_threshold;
    bool initial_in_support = true; // when false, the witness fails any lambda > 0
};

struct SubsystemCheck {
    bool ok;
    std::string reason; // first violated condition when !ok

    explicit operator bool() const { return ok; }
};

// Definition of a weak subsystem: locations kept, invariants and guards
// shrunk, distribution entries kept verbatim or dropped (their mass going
// to fail). The transition injection is decided by maximum bipartite
// matching over the compatibility relation.
SubsystemCheck is_subsystem(const Pta& original, const Pta& sub);

// Strong subsystems additionally keep every original transition (up to a
// left inverse of the injection), shrink guards exactly to the invariant,
// and have invariants closed under time successors within the original.
SubsystemCheck is_strong_subsystem(const Pta& original, const Pta& sub);

// Total invariant volume over all locations except goal and fail.
// finite == false encodes +infinity.
struct PtaVolume {
    bool finite;
    Rational value;
};
PtaVolume pta_volume(const Pta& pta, int threads = 1);

// The subsystem keeping exactly the locations in `keep` (which must contain
// initial, goal and fail); distribution entries into dropped locations are
// folded into fail. Both a weak and a strong subsystem of the input.
Pta prune_to_locations(const Pta& pta, const std::vector<int>& keep);

// Fold the mass of entries targeting `fail` (and entries listed in `drop`)
// into a single reset-free fail entry; used when constructing subsystems.
void fold_fail_mass(const Pta& pta, Transition& t, const std::vector<bool>& drop_entry);

} // namespace ptawit
