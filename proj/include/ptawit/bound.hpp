#pragma once

#include "ptawit/error.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace ptawit {

enum class Strict : std::uint8_t {
    Lt = 0, // strict, <
    Le = 1, // non-strict, <=
};

// An element of (Z ∪ {∞,−∞}) × {<,≤} with the lexicographic order in which
// < is strictly below ≤ at equal values. Infinities are normalized to pair
// with < on construction, so equality is structural.
class Bound {
public:
    Bound() : value_(0), inf_(0), strict_(Strict::Le) {}

    static Bound finite(std::int64_t value, Strict s) {
        Bound b;
        b.value_ = value;
        b.inf_ = 0;
        b.strict_ = s;
        return b;
    }
    static Bound le(std::int64_t value) { return finite(value, Strict::Le); }
    static Bound lt(std::int64_t value) { return finite(value, Strict::Lt); }
    static Bound pos_inf() {
        Bound b;
        b.inf_ = 1;
        b.strict_ = Strict::Lt;
        return b;
    }
    static Bound neg_inf() {
        Bound b;
        b.inf_ = -1;
        b.strict_ = Strict::Lt;
        return b;
    }

    bool is_pos_inf() const { return inf_ > 0; }
    bool is_neg_inf() const { return inf_ < 0; }
    bool is_finite() const { return inf_ == 0; }
    std::int64_t value() const { return value_; }
    bool is_strict() const { return strict_ == Strict::Lt; }
    Strict strictness() const { return strict_; }

    bool operator==(const Bound& o) const {
        if (inf_ != o.inf_) return false;
        if (inf_ != 0) return true;
        return value_ == o.value_ && strict_ == o.strict_;
    }
    bool operator!=(const Bound& o) const { return !(*this == o); }

    bool operator<(const Bound& o) const {
        if (inf_ != o.inf_) return inf_ < o.inf_;
        if (inf_ != 0) return false;
        if (value_ != o.value_) return value_ < o.value_;
        return strict_ == Strict::Lt && o.strict_ == Strict::Le;
    }
    bool operator<=(const Bound& o) const { return *this < o || *this == o; }
    bool operator>(const Bound& o) const { return o < *this; }
    bool operator>=(const Bound& o) const { return o <= *this; }

    // Rendering used in debug dumps: "<=5", "<5", "inf", "-inf".
    std::string str() const;

private:
    std::int64_t value_;
    int inf_; // -1, 0, +1
    Strict strict_;
};

// (a,◁1) + (b,◁2) = (a+b, min{◁1,◁2}); throws UndefinedSum on (+∞)+(−∞).
Bound bound_add(const Bound& a, const Bound& b);

Bound bound_min(const Bound& a, const Bound& b);
Bound bound_max(const Bound& a, const Bound& b);

inline Bound bound_zero() { return Bound::le(0); }

} // namespace ptawit
