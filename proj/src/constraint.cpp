#include "ptawit/constraint.hpp"

#include <sstream>

namespace ptawit {

ClockConstraint ClockConstraint::top(int real_clocks) {
    ClockConstraint c;
    c.real_clocks_ = real_clocks;
    c.dbm_ = Dbm::universe(real_clocks);
    return c;
}

ClockConstraint ClockConstraint::bottom(int real_clocks) {
    ClockConstraint c;
    c.real_clocks_ = real_clocks;
    c.dbm_ = Dbm::empty(real_clocks);
    return c;
}

ClockConstraint ClockConstraint::from_atoms(int real_clocks,
                                            std::vector<ConstraintAtom> atoms) {
    ClockConstraint c;
    c.real_clocks_ = real_clocks;
    Dbm d = Dbm::universe(real_clocks);
    for (const auto& a : atoms) {
        switch (a.op) {
        case CmpOp::Le: d.constrain(a.left, a.right, Bound::le(a.value)); break;
        case CmpOp::Lt: d.constrain(a.left, a.right, Bound::lt(a.value)); break;
        case CmpOp::Ge: d.constrain(a.right, a.left, Bound::le(-a.value)); break;
        case CmpOp::Gt: d.constrain(a.right, a.left, Bound::lt(-a.value)); break;
        }
    }
    c.dbm_ = canonicalize(d);
    c.atoms_ = std::move(atoms);
    if (c.dbm_.is_empty()) c.atoms_.clear(); // renders as "false"
    return c;
}

ClockConstraint ClockConstraint::from_dbm(const Dbm& canonical) {
    ClockConstraint c;
    c.real_clocks_ = canonical.real_clocks();
    c.dbm_ = canonical;
    if (canonical.is_empty()) return c;
    int n = canonical.real_clocks();
    // upper and lower bounds per clock, then diagonals
    for (int i = 1; i <= n; ++i) {
        const Bound& up = canonical.at(i, 0);
        if (!up.is_pos_inf())
            c.atoms_.push_back({i, 0, up.is_strict() ? CmpOp::Lt : CmpOp::Le, up.value()});
        const Bound& lo = canonical.at(0, i);
        if (!lo.is_pos_inf() && lo != bound_zero())
            c.atoms_.push_back({i, 0, lo.is_strict() ? CmpOp::Gt : CmpOp::Ge, -lo.value()});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const Bound& b = canonical.at(i, j);
            if (b.is_pos_inf()) continue;
            c.atoms_.push_back({i, j, b.is_strict() ? CmpOp::Lt : CmpOp::Le, b.value()});
        }
    return c;
}

bool ClockConstraint::is_true() const {
    return !dbm_.is_empty() && dbm_ == Dbm::universe(real_clocks_);
}

std::string ClockConstraint::text(const std::vector<std::string>& clock_names) const {
    if (dbm_.is_empty()) return "false";
    if (atoms_.empty()) return "true";
    auto name = [&](int i) -> std::string {
        if (i == 0) return "0";
        if (i - 1 < static_cast<int>(clock_names.size())) return clock_names[i - 1];
        return "c" + std::to_string(i);
    };
    std::ostringstream out;
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
        if (k) out << " & ";
        const auto& a = atoms_[k];
        out << name(a.left);
        if (a.right != 0) out << "-" << name(a.right);
        switch (a.op) {
        case CmpOp::Le: out << "<="; break;
        case CmpOp::Lt: out << "<"; break;
        case CmpOp::Ge: out << ">="; break;
        case CmpOp::Gt: out << ">"; break;
        }
        out << a.value;
    }
    return out.str();
}

std::int64_t ClockConstraint::max_constant() const {
    std::int64_t m = 0;
    for (const auto& a : atoms_)
        m = std::max(m, a.value < 0 ? -a.value : a.value);
    return m;
}

ClockConstraint constraint_and(const ClockConstraint& a, const ClockConstraint& b) {
    return ClockConstraint::from_dbm(canonicalize(intersect(a.dbm(), b.dbm())));
}

} // namespace ptawit
