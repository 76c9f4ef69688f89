#include "ptawit/dbm.hpp"

#include <sstream>

namespace ptawit {

Valuation Valuation::plus(const Rational& t) const {
    Valuation r(*this);
    for (int i = 1; i <= real_clocks(); ++i) r[i] += t;
    return r;
}

Valuation Valuation::reset(const std::vector<int>& clocks) const {
    Valuation r(*this);
    for (int c : clocks) r[c] = 0;
    return r;
}

Dbm Dbm::universe(int real_clocks) {
    Dbm d;
    d.dim_ = real_clocks + 1;
    d.empty_ = false;
    d.m_.assign(static_cast<std::size_t>(d.dim_) * d.dim_, Bound::pos_inf());
    for (int i = 0; i < d.dim_; ++i) d.at(i, i) = bound_zero();
    for (int j = 1; j < d.dim_; ++j) d.at(0, j) = bound_zero(); // c_j >= 0
    return d;
}

Dbm Dbm::empty(int real_clocks) {
    Dbm d;
    d.dim_ = real_clocks + 1;
    d.empty_ = true;
    return d;
}

Dbm Dbm::point(const std::vector<std::int64_t>& values) {
    Dbm d = universe(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        int ci = static_cast<int>(i) + 1;
        d.constrain(ci, 0, Bound::le(values[i]));
        d.constrain(0, ci, Bound::le(-values[i]));
    }
    return canonicalize(d);
}

void Dbm::constrain(int i, int j, const Bound& b) {
    at(i, j) = bound_min(at(i, j), b);
}

bool Dbm::operator==(const Dbm& o) const {
    if (dim_ != o.dim_) return false;
    if (empty_ || o.empty_) return empty_ == o.empty_;
    return m_ == o.m_;
}

std::string Dbm::str(const std::vector<std::string>& clock_names) const {
    if (empty_) return "false";
    auto name = [&](int i) -> std::string {
        if (i == 0) return "0";
        if (i - 1 < static_cast<int>(clock_names.size())) return clock_names[i - 1];
        return "c" + std::to_string(i);
    };
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if (i == j) continue;
            const Bound& b = at(i, j);
            if (b.is_pos_inf()) continue;
            if (i == 0 && b == bound_zero()) continue; // implicit c_j >= 0
            if (any) out << "\n";
            any = true;
            out << name(i) << " - " << name(j) << (b.is_strict() ? " < " : " <= ")
                << b.value();
        }
    if (!any) return "true";
    return out.str();
}

Dbm canonicalize(const Dbm& m) {
    if (m.is_empty()) return m;
    Dbm r = m;
    int n = r.dim();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const Bound& ik = r.at(i, k);
            if (ik.is_pos_inf()) continue;
            for (int j = 0; j < n; ++j) {
                const Bound& kj = r.at(k, j);
                if (kj.is_pos_inf()) continue;
                Bound through = bound_add(ik, kj);
                if (through < r.at(i, j)) r.at(i, j) = through;
            }
        }
    for (int i = 0; i < n; ++i)
        if (r.at(i, i) < bound_zero()) return Dbm::empty(r.real_clocks());
    return r;
}

bool is_canonical(const Dbm& m) {
    if (m.is_empty()) return true;
    return canonicalize(m) == m;
}

Dbm intersect(const Dbm& a, const Dbm& b) {
    if (a.dim() != b.dim())
        raise(ErrorKind::ClockMismatch, "intersect: clock sets differ");
    if (a.is_empty()) return a;
    if (b.is_empty()) return b;
    Dbm r = a;
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j)
            r.at(i, j) = bound_min(r.at(i, j), b.at(i, j));
    return r;
}

Dbm time_closure(const Dbm& m) {
    if (m.is_empty())
        raise(ErrorKind::EmptyInput, "time_closure: empty zone");
    Dbm r = m;
    for (int i = 1; i < r.dim(); ++i) r.at(i, 0) = Bound::pos_inf();
    return r;
}

Dbm zone_closure(const Dbm& a, const Dbm& b) {
    if (a.dim() != b.dim())
        raise(ErrorKind::ClockMismatch, "zone_closure: clock sets differ");
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    if (!is_canonical(a) || !is_canonical(b))
        raise(ErrorKind::NonCanonicalInput, "zone_closure: inputs must be canonical");
    Dbm r = a;
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j)
            r.at(i, j) = bound_max(a.at(i, j), b.at(i, j));
    return r;
}

bool includes(const Dbm& outer, const Dbm& inner) {
    if (outer.dim() != inner.dim())
        raise(ErrorKind::ClockMismatch, "includes: clock sets differ");
    Dbm in = canonicalize(inner);
    if (in.is_empty()) return true;
    Dbm out = canonicalize(outer);
    if (out.is_empty()) return false;
    for (int i = 0; i < in.dim(); ++i)
        for (int j = 0; j < in.dim(); ++j)
            if (out.at(i, j) < in.at(i, j)) return false;
    return true;
}

Dbm reset(const Dbm& m, const std::vector<int>& clocks) {
    if (m.is_empty())
        raise(ErrorKind::EmptyInput, "reset: empty zone");
    Dbm r = m;
    for (int c : clocks) {
        // v[c := 0]: project c away, then pin it to the zero clock.
        for (int j = 0; j < r.dim(); ++j) {
            if (j == c) continue;
            r.at(c, j) = r.at(0, j);
            r.at(j, c) = r.at(j, 0);
        }
        r.at(c, c) = bound_zero();
    }
    return canonicalize(r);
}

bool satisfies(const Valuation& v, const Dbm& m) {
    if (m.is_empty()) return false;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            const Bound& b = m.at(i, j);
            if (b.is_pos_inf()) continue;
            if (b.is_neg_inf()) return false;
            Rational diff = v[i] - v[j];
            if (b.is_strict() ? !(diff < b.value()) : !(diff <= b.value()))
                return false;
        }
    return true;
}

Dbm canonical_dbm_of_union(const std::vector<Dbm>& parts) {
    Dbm acc;
    bool seen = false;
    for (const Dbm& p : parts) {
        Dbm c = canonicalize(p);
        if (c.is_empty()) continue;
        if (!seen) {
            acc = c;
            seen = true;
        } else {
            acc = zone_closure(acc, c);
        }
    }
    if (!seen)
        raise(ErrorKind::EmptySet, "canonical_dbm_of_union: all members empty");
    return acc;
}

} // namespace ptawit
