#include "ptawit/volume.hpp"

#include "ptawit/error.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

namespace ptawit {

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Counts cells with integer-part vector index in [from, to).
long long count_cells(const Dbm& m, std::int64_t k, long long from, long long to) {
    int n = m.real_clocks();
    std::vector<int> perm(n);
    long long hits = 0;
    for (long long cell = from; cell < to; ++cell) {
        long long rest = cell;
        std::vector<std::int64_t> ints(n);
        for (int i = 0; i < n; ++i) {
            ints[i] = rest % k;
            rest /= k;
        }
        std::iota(perm.begin(), perm.end(), 0);
        do {
            // clock perm[r] carries the (r+1)-th smallest fraction
            Valuation v(n);
            for (int r = 0; r < n; ++r)
                v[perm[r] + 1] = Rational(ints[perm[r]]) + Rational(r + 1, n + 1);
            if (satisfies(v, m)) ++hits;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return hits;
}

} // namespace

VolumeResult dbm_volume(const Dbm& m, std::int64_t k, int threads) {
    int n = m.real_clocks();
    VolumeResult out;
    out.real_clocks = n;
    if (m.is_empty() || n == 0) {
        out.value = Rational(0);
        return out;
    }
    if (!is_canonical(m))
        raise(ErrorKind::NonCanonicalInput, "dbm_volume: input must be canonical");
    for (int i = 1; i <= n; ++i) {
        const Bound& up = m.at(i, 0);
        if (up.is_pos_inf() || up.value() > k)
            raise(ErrorKind::UnboundedZone,
                  "dbm_volume: upper bound of clock " + std::to_string(i) +
                      " exceeds K=" + std::to_string(k));
    }
    long long boxes = 1;
    for (int i = 0; i < n; ++i) {
        boxes *= k;
        if (boxes > 100'000'000)
            raise(ErrorKind::Internal, "dbm_volume: cell enumeration too large");
    }
    if (boxes * factorial(n) > 100'000'000)
        raise(ErrorKind::Internal, "dbm_volume: cell enumeration too large");

    long long hits = 0;
    if (threads <= 1 || boxes < 64) {
        hits = count_cells(m, k, 0, boxes);
    } else {
        int t = std::min<long long>(threads, boxes);
        std::vector<long long> partial(static_cast<std::size_t>(t), 0);
        std::vector<std::thread> pool;
        long long chunk = (boxes + t - 1) / t;
        for (int w = 0; w < t; ++w) {
            long long from = w * chunk;
            long long to = std::min(boxes, from + chunk);
            pool.emplace_back([&, w, from, to] { partial[static_cast<std::size_t>(w)] = count_cells(m, k, from, to); });
        }
        for (auto& th : pool) th.join();
        for (long long p : partial) hits += p;
    }
    out.cell_count = hits;
    out.value = Rational(hits, factorial(n));
    return out;
}

Dbm mi_generator(const std::set<std::pair<int, int>>& relation, int n) {
    Dbm d = Dbm::universe(n);
    for (int i = 1; i <= n; ++i) {
        d.at(i, 0) = Bound::le(1);
        d.at(0, i) = Bound::le(0);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            d.at(i, j) = relation.count({i, j}) ? Bound::le(0) : Bound::le(1);
        }
    return d;
}

} // namespace ptawit
