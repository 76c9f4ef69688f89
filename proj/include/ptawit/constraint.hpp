#pragma once

#include "ptawit/dbm.hpp"

#include <string>
#include <vector>

namespace ptawit {

enum class CmpOp { Le, Lt, Ge, Gt };

// One conjunct "c_left - c_right op value"; right = 0 encodes an absolute
// bound on c_left, left = 0 a lower bound written through the zero clock.
struct ConstraintAtom {
    int left;
    int right;
    CmpOp op;
    std::int64_t value;

    bool operator==(const ConstraintAtom&) const = default;
};

// A conjunction of difference constraints together with its canonical DBM.
// The two views are kept consistent by construction: atoms are either the
// source of the DBM or regenerated from it.
class ClockConstraint {
public:
    ClockConstraint() : real_clocks_(0), dbm_(Dbm::universe(0)) {}

    static ClockConstraint top(int real_clocks);
    static ClockConstraint bottom(int real_clocks);
    static ClockConstraint from_atoms(int real_clocks, std::vector<ConstraintAtom> atoms);
    // Regenerates a minimal-ish atom list from a canonical DBM.
    static ClockConstraint from_dbm(const Dbm& canonical);

    const Dbm& dbm() const { return dbm_; }
    const std::vector<ConstraintAtom>& atoms() const { return atoms_; }
    int real_clocks() const { return real_clocks_; }
    bool is_false() const { return dbm_.is_empty(); }
    bool is_true() const;

    // "x<=2 & x-y<1", or "true" / "false".
    std::string text(const std::vector<std::string>& clock_names) const;

    // Semantic equality: equal canonical DBMs.
    bool operator==(const ClockConstraint& o) const { return dbm_ == o.dbm_; }
    bool operator!=(const ClockConstraint& o) const { return !(*this == o); }

    // Largest absolute constant appearing in the atoms (0 when none).
    std::int64_t max_constant() const;

private:
    int real_clocks_;
    std::vector<ConstraintAtom> atoms_;
    Dbm dbm_;
};

// Conjunction, reconstructed from the canonical intersection.
ClockConstraint constraint_and(const ClockConstraint& a, const ClockConstraint& b);

} // namespace ptawit
