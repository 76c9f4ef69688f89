#pragma once

#include "ptawit/dbm.hpp"

#include <set>
#include <utility>

namespace ptawit {

// Exact Lebesgue volume of a zone, as a subset of R^{C \ {c0}}. Volumes of
// DBM zones under a clock bound K are multiples of 1/n!.
struct VolumeResult {
    Rational value;
    long long cell_count = 0; // full-dimensional region cells inside the zone
    int real_clocks = 0;      // n; granularity is 1/n!

    bool operator==(const VolumeResult& o) const { return value == o.value; }
};

// Reference cell-counting algorithm: tests one interior representative of
// each of the K^n * n! full-dimensional region cells against M. M must be
// canonical (or Empty); throws UnboundedZone when an upper bound exceeds K.
// threads > 1 fans the cell tests out with a deterministic reduction.
VolumeResult dbm_volume(const Dbm& m, std::int64_t k, int threads = 1);

// The order-polytope DBM family: unit bounds plus x_i <= x_j for every
// (i,j) in I. Returned as written, not canonicalized.
Dbm mi_generator(const std::set<std::pair<int, int>>& relation, int n);

} // namespace ptawit
