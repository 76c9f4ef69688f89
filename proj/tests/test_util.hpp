#pragma once

// Shared helpers for the test suites: deterministic random generators and
// independent oracles. Test-only code; the library never includes this.

#include "ptawit/dbm.hpp"
#include "ptawit/lp.hpp"

#include <optional>
#include <random>
#include <vector>

namespace testutil {

using namespace ptawit;

inline Rational random_rational(std::mt19937_64& rng, long long max_den, long long max_num) {
    std::uniform_int_distribution<long long> den(1, max_den);
    long long d = den(rng);
    std::uniform_int_distribution<long long> num(0, max_num * d);
    return Rational(num(rng), d);
}

// Random DBM built from a handful of random constraints over n clocks with
// constants in [-k, k]; returned canonicalized (possibly empty).
inline Dbm random_dbm(std::mt19937_64& rng, int n, long long k, int constraints = 6) {
    Dbm d = Dbm::universe(n);
    std::uniform_int_distribution<int> clock(0, n);
    std::uniform_int_distribution<long long> value(-k, k);
    std::uniform_int_distribution<int> strict(0, 1);
    for (int c = 0; c < constraints; ++c) {
        int i = clock(rng), j = clock(rng);
        if (i == j) continue;
        long long v = value(rng);
        if (j == 0 && v < 0) v = -v; // keep upper bounds sane more often
        d.constrain(i, j, strict(rng) ? Bound::le(v) : Bound::lt(v));
    }
    return canonicalize(d);
}

inline Dbm random_nonempty_dbm(std::mt19937_64& rng, int n, long long k) {
    for (;;) {
        Dbm d = random_dbm(rng, n, k);
        if (!d.is_empty()) return d;
    }
}

// Random valuation inside the box [0, k]^n.
inline Valuation random_valuation(std::mt19937_64& rng, int n, long long k) {
    Valuation v(n);
    for (int i = 1; i <= n; ++i) v[i] = random_rational(rng, 16, k);
    return v;
}

// sup { v_i - v_j : v in closure(Val(M)) } computed by an LP over the raw
// constraint rows, fully independent of the DBM shortest-path code.
// Returns nullopt when unbounded.
inline std::optional<Rational> lp_sup_diff(const Dbm& m, int i, int j) {
    LinearProgram lp;
    int n = m.real_clocks();
    std::vector<int> var(n + 1, -1);
    for (int c = 1; c <= n; ++c)
        var[c] = lp.add_var("v" + std::to_string(c), Rational(0), std::nullopt);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            if (p == q) continue;
            const Bound& b = m.at(p, q);
            if (b.is_pos_inf()) continue;
            std::vector<LpTerm> terms;
            if (p != 0) terms.push_back({var[p], Rational(1)});
            if (q != 0) terms.push_back({var[q], Rational(-1)});
            lp.add_row(terms, Rel::Le, Rational(b.value()));
        }
    std::vector<LpTerm> obj;
    if (i != 0) obj.push_back({var[i], Rational(1)});
    if (j != 0) obj.push_back({var[j], Rational(-1)});
    lp.set_objective(Sense::Maximize, obj);
    Solution s = solve_lp(lp);
    if (s.status == SolveStatus::Unbounded) return std::nullopt;
    if (!s.optimal()) return Rational(0); // infeasible: callers guard on emptiness
    return s.objective;
}

} // namespace testutil
