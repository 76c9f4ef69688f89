#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptawit/quotient.hpp"
#include "ptawit/region.hpp"

#include "generators.hpp"
#include "test_util.hpp"

#include <random>
#include <set>

using namespace ptawit;
using namespace testutil;

TEST_CASE("region round trip: region_of after representative is the identity") {
    for (std::int64_t k : {1, 2}) {
        auto regions = enumerate_regions(2, k);
        for (const auto& r : regions) {
            Valuation v = region_representative(r, k);
            CHECK(region_of(r.location, v, k) == r);
        }
        CHECK(regions.size() > 10);
    }
}

TEST_CASE("region DBMs are canonical and reproduce the region constraints") {
    std::mt19937_64 rng(7);
    for (std::int64_t k : {1, 2}) {
        for (const auto& r : enumerate_regions(2, k)) {
            Dbm d = region_dbm(r, k);
            CHECK(canonicalize(d) == d);
            // representative lies inside, perturbed points agree with region_of
            CHECK(satisfies(region_representative(r, k), d));
            for (int s = 0; s < 10; ++s) {
                Valuation v = random_valuation(rng, 2, k + 1);
                bool inside = satisfies(v, d);
                CHECK(inside == (region_of(r.location, v, k) == r));
            }
        }
    }
}

TEST_CASE("region count matches the analytic count for bounded valuations") {
    // Regions with every clock non-free refine [0,K]^n; their number has the
    // closed form sum over subsets S of clocks with positive fractions:
    // (K+1)^{n} ... computed here by brute force over a fine grid instead:
    // every grid point of a fine dyadic grid belongs to exactly one region.
    for (std::int64_t k : {1, 2}) {
        auto regions = enumerate_regions(2, k);
        std::set<Region> seen;
        for (int a = 0; a <= 4 * k; ++a)
            for (int b = 0; b <= 4 * k; ++b) {
                Valuation v(2);
                v[1] = Rational(a, 4);
                v[2] = Rational(b, 4);
                seen.insert(region_of(-1, v, k));
            }
        // every enumerated non-free region with int parts <= k is hit by the
        // quarter grid except those needing three distinct fractions
        for (const auto& r : seen) {
            CHECK(std::find(regions.begin(), regions.end(), r) != regions.end());
        }
    }
}

TEST_CASE("single location tau chain") {
    // inv x<=1, one transition to fail at x=1: regions {x=0}, (0,1), {x=1}
    auto r = parse_pta("clocks x;\nbound 1;\nloc l0 inv \"x<=1\" init;\n"
                       "loc g inv \"true\" goal;\nloc f inv \"true\" fail;\n"
                       "trans l0 guard \"x>=1\" act a { 1 -> f; };\n");
    REQUIRE(r.ok());
    QuotientMdp m = build_quotient(*r.pta, 1);
    CHECK(m.num_region_states() == 3);
    // initial region {x=0} has tau edges to both later regions
    REQUIRE(m.is_region_state(m.initial));
    const auto& init_edges = m.edges[static_cast<std::size_t>(m.region_index(m.initial))];
    int taus = 0;
    for (const auto& e : init_edges)
        if (e.action == m.tau_action) ++taus;
    CHECK(taus == 2);
}

TEST_CASE("goal-initial model collapses to the goal state") {
    Pta pta = parse_fixture("goal-initial.pta");
    QuotientMdp m = build_quotient(pta, 1);
    CHECK(m.initial == QuotientMdp::kGoal);
    CHECK(m.num_region_states() == 0);
}

TEST_CASE("fig1a quotient: distributions sum to one, proceed holds") {
    Pta pta = parse_fixture("fig1a.pta");
    QuotientMdp m = build_quotient(pta, 2);
    CHECK(m.num_region_states() > 10);
    for (int i = 0; i < m.num_region_states(); ++i)
        for (const auto& e : m.edges[static_cast<std::size_t>(i)]) {
            Rational sum(0);
            for (const auto& [t, p] : e.dist) {
                CHECK(p > 0);
                sum += p;
            }
            CHECK(sum == 1);
        }
    CHECK(check_proceed_assumption(m).ok);

    // dot export mentions goal, fail and dashed tau edges
    std::string dot = quotient_to_dot(m);
    CHECK(dot.find("goal") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);
}

TEST_CASE("proceed assumption fails on an action self-loop without alternative") {
    auto r = parse_pta("clocks x;\nbound 1;\nloc l0 inv \"x<=0\" init;\n"
                       "loc g inv \"true\" goal;\nloc f inv \"true\" fail;\n"
                       "trans l0 guard \"true\" act a { 1 -> l0; };\n");
    REQUIRE(r.ok());
    QuotientMdp m = build_quotient(*r.pta, 1);
    ProceedCheck pc = check_proceed_assumption(m);
    CHECK(!pc.ok);
    CHECK(pc.offending.size() == 1);
}

TEST_CASE("invariant-expiry models satisfy the proceed assumption") {
    // every location forces fail by invariant expiry (time-bounded pattern)
    auto r = parse_pta("clocks x;\nbound 2;\nloc l0 inv \"x<=2\" init;\n"
                       "loc g inv \"true\" goal;\nloc f inv \"true\" fail;\n"
                       "trans l0 guard \"x>=2\" act a { 1/2 -> g; 1/2 -> f; };\n");
    REQUIRE(r.ok());
    QuotientMdp m = build_quotient(*r.pta, 2);
    CHECK(check_proceed_assumption(m).ok);
}

TEST_CASE("constants above the bound are rejected") {
    Pta pta = parse_fixture("fig1a.pta");
    CHECK_THROWS_AS(build_quotient(pta, 1), Error);
}

TEST_CASE("diagonal constraints with unbounded clocks are rejected") {
    auto r = parse_pta("clocks x y;\nbound 2;\nloc l0 inv \"x<=2\" init;\n"
                       "loc g inv \"true\" goal;\nloc f inv \"true\" fail;\n"
                       "trans l0 guard \"x-y<=1\" act a { 1 -> g; };\n");
    REQUIRE(r.ok());
    CHECK_THROWS_AS(build_quotient(*r.pta, 2), Error);

    // bounded variant is fine
    auto r2 = parse_pta("clocks x y;\nbound 2;\nloc l0 inv \"x<=2 & y<=2\" init;\n"
                        "loc g inv \"true\" goal;\nloc f inv \"true\" fail;\n"
                        "trans l0 guard \"x-y<=1\" act a { 1 -> g; };\n");
    REQUIRE(r2.ok());
    QuotientMdp m = build_quotient(*r2.pta, 2);
    CHECK(check_proceed_assumption(m).ok);
}

TEST_CASE("zone closure yields the smallest zone containing the union (oracle)") {
    // Exhaustive over region pairs at n = 2, K = 2. The join must contain
    // both regions, be canonical, decompose exactly into the regions it
    // includes, and be contained in every sampled zone covering the union.
    std::mt19937_64 rng(42);
    std::int64_t k = 2;
    auto regions = enumerate_regions(2, k);
    std::vector<Dbm> region_dbms;
    for (const auto& r : regions) region_dbms.push_back(region_dbm(r, k));

    // entrywise sup over a region set, straight from region data
    auto sup_over = [&](const std::vector<int>& members) -> Dbm {
        Dbm join = region_dbms[static_cast<std::size_t>(members[0])];
        for (std::size_t i = 1; i < members.size(); ++i) {
            const Dbm& d = region_dbms[static_cast<std::size_t>(members[i])];
            for (int p = 0; p < join.dim(); ++p)
                for (int q = 0; q < join.dim(); ++q)
                    join.at(p, q) = bound_max(join.at(p, q), d.at(p, q));
        }
        return join;
    };

    std::uniform_int_distribution<std::size_t> pick(0, regions.size() - 1);
    int checked = 0;
    for (std::size_t i = 0; i < regions.size(); ++i)
        for (std::size_t j = i; j < regions.size(); ++j) {
            if (++checked > 1200 && (rng() & 3)) continue; // keep the suite quick
            const Dbm& a = region_dbms[i];
            const Dbm& b = region_dbms[j];
            Dbm join = zone_closure(a, b);
            CHECK(canonicalize(join) == join); // Lemma: the join is canonical
            CHECK(includes(join, a));
            CHECK(includes(join, b));
            // the join equals the sup over its own region decomposition:
            // no smaller region-aligned zone contains the union
            std::vector<int> members;
            for (std::size_t r = 0; r < regions.size(); ++r)
                if (includes(join, region_dbms[r])) members.push_back(static_cast<int>(r));
            CHECK(join == sup_over(members));
            // minimality against independently sampled covering zones
            for (int t = 0; t < 4; ++t) {
                Dbm z = random_dbm(rng, 2, 2, 3);
                if (z.is_empty()) continue;
                if (!includes(z, a) || !includes(z, b)) continue;
                CHECK(includes(z, join));
            }
            // joins of joins still decompose exactly (union of four regions)
            if ((checked & 7) == 0) {
                Dbm c = region_dbms[pick(rng)];
                Dbm d = region_dbms[pick(rng)];
                Dbm big = zone_closure(join, zone_closure(c, d));
                CHECK(canonicalize(big) == big);
                std::vector<int> mem2;
                for (std::size_t r = 0; r < regions.size(); ++r)
                    if (includes(big, region_dbms[r])) mem2.push_back(static_cast<int>(r));
                CHECK(big == sup_over(mem2));
            }
        }
}
