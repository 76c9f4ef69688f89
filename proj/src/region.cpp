#include "ptawit/region.hpp"

#include "ptawit/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ptawit {

Region region_of(int location, const Valuation& v, std::int64_t k) {
    Region r;
    r.location = location;
    int n = v.real_clocks();
    r.clocks.resize(static_cast<std::size_t>(n));
    std::vector<Rational> fracs;
    for (int i = 1; i <= n; ++i) {
        ClockRegion& c = r.clocks[static_cast<std::size_t>(i - 1)];
        if (v[i] > k) {
            c.free = true;
            continue;
        }
        Integer ip = numerator(v[i]) / denominator(v[i]); // values are >= 0
        c.int_part = static_cast<std::int64_t>(ip);
        Rational frac = v[i] - Rational(ip);
        if (frac == 0) {
            c.frac_rank = 0;
        } else {
            c.frac_rank = -1; // placeholder, ranked below
            fracs.push_back(frac);
        }
    }
    std::sort(fracs.begin(), fracs.end());
    fracs.erase(std::unique(fracs.begin(), fracs.end()), fracs.end());
    for (int i = 1; i <= n; ++i) {
        ClockRegion& c = r.clocks[static_cast<std::size_t>(i - 1)];
        if (c.free || c.frac_rank == 0) continue;
        Rational frac = v[i] - Rational(Integer(numerator(v[i]) / denominator(v[i])));
        auto it = std::lower_bound(fracs.begin(), fracs.end(), frac);
        c.frac_rank = static_cast<int>(it - fracs.begin()) + 1;
    }
    return r;
}

Valuation region_representative(const Region& r, std::int64_t k) {
    int n = static_cast<int>(r.clocks.size());
    int max_rank = 0;
    for (const auto& c : r.clocks)
        if (!c.free) max_rank = std::max(max_rank, c.frac_rank);
    // dyadic slots: rank -> rank / 2^s with 2^s > max_rank
    std::int64_t denom = 1;
    while (denom <= max_rank) denom *= 2;
    Valuation v(n);
    for (int i = 1; i <= n; ++i) {
        const ClockRegion& c = r.clocks[static_cast<std::size_t>(i - 1)];
        if (c.free) {
            v[i] = Rational(2 * k + 1, 2);
        } else {
            v[i] = Rational(c.int_part) + Rational(c.frac_rank, denom);
        }
    }
    return v;
}

Dbm region_dbm(const Region& r, std::int64_t k) {
    int n = static_cast<int>(r.clocks.size());
    Dbm d = Dbm::universe(n);
    auto cr = [&](int i) -> const ClockRegion& { return r.clocks[static_cast<std::size_t>(i - 1)]; };
    for (int i = 1; i <= n; ++i) {
        const ClockRegion& ci = cr(i);
        if (ci.free) {
            d.at(i, 0) = Bound::pos_inf();
            d.at(0, i) = Bound::lt(-k);
        } else if (ci.frac_rank == 0) {
            d.at(i, 0) = Bound::le(ci.int_part);
            d.at(0, i) = Bound::le(-ci.int_part);
        } else {
            d.at(i, 0) = Bound::lt(ci.int_part + 1);
            d.at(0, i) = Bound::lt(-ci.int_part);
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const ClockRegion& ci = cr(i);
            const ClockRegion& cj = cr(j);
            if (ci.free) {
                d.at(i, j) = Bound::pos_inf();
            } else if (cj.free) {
                std::int64_t sup_i = ci.frac_rank == 0 ? ci.int_part : ci.int_part + 1;
                d.at(i, j) = Bound::lt(sup_i - k);
            } else {
                std::int64_t diff = ci.int_part - cj.int_part;
                if (ci.frac_rank == cj.frac_rank)
                    d.at(i, j) = Bound::le(diff);
                else if (ci.frac_rank > cj.frac_rank)
                    d.at(i, j) = Bound::lt(diff + 1);
                else
                    d.at(i, j) = Bound::lt(diff);
            }
        }
    return d;
}

Region region_reset(const Region& r, const std::vector<int>& clocks, std::int64_t k,
                    int target_location) {
    Valuation v = region_representative(r, k).reset(clocks);
    return region_of(target_location, v, k);
}

std::optional<Region> region_time_successor(const Region& r, std::int64_t k) {
    Valuation v = region_representative(r, k);
    int n = v.real_clocks();
    bool any_zero_frac = false;
    std::optional<Rational> min_dist; // distance to the next integer boundary
    for (int i = 1; i <= n; ++i) {
        const ClockRegion& c = r.clocks[static_cast<std::size_t>(i - 1)];
        if (c.free) continue;
        if (c.frac_rank == 0) any_zero_frac = true;
        Rational frac = v[i] - Rational(c.int_part);
        Rational dist = frac == 0 ? Rational(1) : Rational(1) - frac;
        if (!min_dist || dist < *min_dist) min_dist = dist;
    }
    if (!min_dist) return std::nullopt; // all clocks free
    Rational t = any_zero_frac ? *min_dist / 2 : *min_dist;
    Region succ = region_of(r.location, v.plus(t), k);
    if (succ == r) return std::nullopt;
    return succ;
}

std::vector<Region> enumerate_regions(int real_clocks, std::int64_t k) {
    std::set<Region> out;
    int n = real_clocks;
    // per-clock choices: free, or (int 0..k, raw rank 0..n); raw ranks are
    // normalized to contiguous 1..m afterwards
    std::vector<std::vector<ClockRegion>> partial = {{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<ClockRegion>> next;
        for (const auto& p : partial) {
            {
                auto q = p;
                q.push_back(ClockRegion{true, 0, 0});
                next.push_back(q);
            }
            for (std::int64_t ip = 0; ip <= k; ++ip)
                for (int rank = 0; rank <= n; ++rank) {
                    if (ip == k && rank > 0) continue; // beyond k is the free class
                    auto q = p;
                    q.push_back(ClockRegion{false, ip, rank});
                    next.push_back(q);
                }
        }
        partial = std::move(next);
    }
    for (auto& p : partial) {
        // normalize ranks to contiguous 1..m
        std::set<int> ranks;
        for (const auto& c : p)
            if (!c.free && c.frac_rank > 0) ranks.insert(c.frac_rank);
        std::map<int, int> remap;
        int next_rank = 1;
        for (int rk : ranks) remap[rk] = next_rank++;
        Region r;
        r.clocks = p;
        for (auto& c : r.clocks)
            if (!c.free && c.frac_rank > 0) c.frac_rank = remap[c.frac_rank];
        out.insert(r);
    }
    return std::vector<Region>(out.begin(), out.end());
}

} // namespace ptawit
