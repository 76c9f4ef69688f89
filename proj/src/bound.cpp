#include "ptawit/bound.hpp"

#include <sstream>

namespace ptawit {

std::string Bound::str() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    std::ostringstream out;
    out << (is_strict() ? "<" : "<=") << value_;
    return out.str();
}

Bound bound_add(const Bound& a, const Bound& b) {
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
        raise(ErrorKind::UndefinedSum, "bound_add: (+inf) + (-inf) is undefined");
    if (a.is_pos_inf() || b.is_pos_inf()) return Bound::pos_inf();
    if (a.is_neg_inf() || b.is_neg_inf()) return Bound::neg_inf();
    Strict s = (a.is_strict() || b.is_strict()) ? Strict::Lt : Strict::Le;
    return Bound::finite(a.value() + b.value(), s);
}

Bound bound_min(const Bound& a, const Bound& b) { return a < b ? a : b; }

Bound bound_max(const Bound& a, const Bound& b) { return a < b ? b : a; }

} // namespace ptawit
