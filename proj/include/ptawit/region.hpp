#pragma once

#include "ptawit/dbm.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace ptawit {

// Per-clock region data under the clock bound K: either "free" (the value
// exceeds K; further growth is indistinguishable by constraints with
// constants <= K), or an integer part in {0..K} plus a fraction rank.
// Rank 0 is the distinguished zero-fraction block; ranks 1..m order the
// distinct positive fractions of the non-free clocks ascendingly.
struct ClockRegion {
    bool free = false;
    std::int64_t int_part = 0;
    int frac_rank = 0;

    auto operator<=>(const ClockRegion&) const = default;
};

// A region of the Alur–Dill equivalence, tagged with its location.
struct Region {
    int location = -1;
    std::vector<ClockRegion> clocks;

    auto operator<=>(const Region&) const = default;
};

// Region of a valuation; does not consult invariants (callers check).
Region region_of(int location, const Valuation& v, std::int64_t k);

// A canonical representative: integer parts plus dyadic fractions spread in
// (0,1) by rank; free clocks sit at K + 1/2. region_of inverts it exactly.
Valuation region_representative(const Region& r, std::int64_t k);

// The canonical DBM of the region's valuation set (already in closed form).
Dbm region_dbm(const Region& r, std::int64_t k);

// Region reached by resetting the given clocks (exact on region data).
Region region_reset(const Region& r, const std::vector<int>& clocks, std::int64_t k,
                    int target_location);

// The immediate time-successor region; nullopt once every clock is free
// (time no longer changes the region).
std::optional<Region> region_time_successor(const Region& r, std::int64_t k);

// All region data vectors over `real_clocks` clocks under bound k (location
// left at -1). Exhaustive; intended for oracles at small n and k.
std::vector<Region> enumerate_regions(int real_clocks, std::int64_t k);

} // namespace ptawit
