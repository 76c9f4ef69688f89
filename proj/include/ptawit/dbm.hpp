#pragma once

#include "ptawit/bound.hpp"
#include "ptawit/rational.hpp"

#include <string>
#include <vector>

namespace ptawit {

// A clock valuation over clocks c0..cn; values[0] is the zero clock and is
// always 0, the remaining entries are nonnegative rationals.
struct Valuation {
    std::vector<Rational> values;

    explicit Valuation(int real_clocks = 0)
        : values(static_cast<std::size_t>(real_clocks) + 1, Rational(0)) {}

    int real_clocks() const { return static_cast<int>(values.size()) - 1; }
    Rational& operator[](int i) { return values[static_cast<std::size_t>(i)]; }
    const Rational& operator[](int i) const { return values[static_cast<std::size_t>(i)]; }

    Valuation plus(const Rational& t) const;
    Valuation reset(const std::vector<int>& clocks) const;
};

// Difference bounds matrix over clocks c0..cn; entry (i,j) bounds c_i - c_j.
// The empty zone is a distinguished marker rather than a matrix with
// inconsistent entries: zone_closure treats it as neutral, intersect as
// absorbing.
class Dbm {
public:
    Dbm() : dim_(0), empty_(true) {}

    // Universal zone (only the implicit nonnegativity constraints).
    static Dbm universe(int real_clocks);
    static Dbm empty(int real_clocks);
    // Zone {v} for an integer-valued point.
    static Dbm point(const std::vector<std::int64_t>& values);

    bool is_empty() const { return empty_; }
    int dim() const { return dim_; }                 // clocks including c0
    int real_clocks() const { return dim_ - 1; }

    Bound& at(int i, int j) { return m_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Bound& at(int i, int j) const { return m_[static_cast<std::size_t>(i) * dim_ + j]; }

    // Conjoin the constraint c_i - c_j ◁ bound (entrywise min); does not
    // canonicalize.
    void constrain(int i, int j, const Bound& b);

    bool operator==(const Dbm& o) const;
    bool operator!=(const Dbm& o) const { return !(*this == o); }

    // One constraint per line, omitting (inf,<) entries and the trivial
    // nonnegativity row; clock 0 prints as "0".
    std::string str(const std::vector<std::string>& clock_names = {}) const;

private:
    int dim_;
    bool empty_;
    std::vector<Bound> m_;

    friend Dbm canonicalize(const Dbm&);
};

// All-pairs-shortest-path closure under (bound_min, bound_add); returns the
// Empty marker iff a diagonal entry tightens below (0,<=). Idempotent.
Dbm canonicalize(const Dbm& m);

bool is_canonical(const Dbm& m);

// Entrywise bound_min (logical conjunction). Not canonicalized; Empty is
// absorbing.
Dbm intersect(const Dbm& a, const Dbm& b);

// The up operator: drops the bounds in column 0, i.e. Val(up(M)) is the set
// of time successors of Val(M). Requires canonical non-empty input and
// preserves canonicity.
Dbm time_closure(const Dbm& m);

// Entrywise bound_max of two canonical DBMs; the result is canonical and its
// valuation set is the smallest zone containing the union. Empty is neutral.
// Throws NonCanonicalInput when an argument differs from its closure.
Dbm zone_closure(const Dbm& a, const Dbm& b);

// Val(inner) ⊆ Val(outer)?
bool includes(const Dbm& outer, const Dbm& inner);

// Zone of reset valuations {v[C:=0] | v in Val(M)}; canonical output.
Dbm reset(const Dbm& m, const std::vector<int>& clocks);

bool satisfies(const Valuation& v, const Dbm& m);

// Canonical DBM of a finite union, computed as iterated zone_closure of the
// canonical forms. Throws EmptySet when every member is empty.
Dbm canonical_dbm_of_union(const std::vector<Dbm>& parts);

} // namespace ptawit
