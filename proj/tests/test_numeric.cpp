#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptawit/bound.hpp"
#include "ptawit/rational.hpp"

#include <random>

using namespace ptawit;

TEST_CASE("rational parsing and printing") {
    CHECK(*parse_rational("6/25") == Rational(6, 25));
    CHECK(*parse_rational("0.24") == Rational(6, 25));
    CHECK(*parse_rational("1") == Rational(1));
    CHECK(*parse_rational("-3/4") == Rational(-3, 4));
    CHECK(*parse_rational("2/4") == Rational(1, 2));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("abc").has_value());
    CHECK(!parse_rational("1/2/3").has_value());

    CHECK(to_fraction_string(Rational(687, 1250)) == "687/1250");
    CHECK(to_fraction_string(Rational(1)) == "1/1");
    CHECK(to_decimal_string(Rational(687, 1250)) == "0.5496");
    CHECK(to_decimal_string(Rational(27, 50)) == "0.54");
    CHECK(to_decimal_string(Rational(1)) == "1");
    CHECK(to_decimal_string(Rational(1, 3)) == "~0.333333");
    CHECK(to_decimal_string(Rational(2, 3)) == "~0.666667");
}

TEST_CASE("rational round-trips through serialization bit-exactly") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long long> den(1, 1'000'000);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(*parse_rational(to_fraction_string(r)) == r);
    }
}

TEST_CASE("bound addition") {
    // (2,<=) + (3,<) = (5,<)
    CHECK(bound_add(Bound::le(2), Bound::lt(3)) == Bound::lt(5));
    // identity element (0,<=)
    CHECK(bound_add(Bound::le(0), Bound::le(0)) == Bound::le(0));
    CHECK(bound_add(Bound::lt(7), bound_zero()) == Bound::lt(7));
    // absorbing top
    CHECK(bound_add(Bound::pos_inf(), Bound::le(-3)) == Bound::pos_inf());
    CHECK(bound_add(Bound::neg_inf(), Bound::le(100)) == Bound::neg_inf());
    CHECK_THROWS_AS(bound_add(Bound::pos_inf(), Bound::neg_inf()), Error);
}

TEST_CASE("bound order and min/max") {
    CHECK(bound_min(Bound::lt(1), Bound::le(1)) == Bound::lt(1));
    CHECK(bound_max(Bound::le(0), Bound::lt(5)) == Bound::lt(5));
    CHECK(bound_min(Bound::neg_inf(), Bound::le(0)) == Bound::neg_inf());
    CHECK(bound_max(Bound::pos_inf(), Bound::le(1000)) == Bound::pos_inf());
    CHECK(Bound::lt(3) < Bound::le(3));
    CHECK(Bound::le(3) < Bound::lt(4));
}

TEST_CASE("bound is a totally ordered commutative monoid, add monotone") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> val(-6, 6);
    std::uniform_int_distribution<int> kind(0, 9);
    auto random_bound = [&]() -> Bound {
        int k = kind(rng);
        if (k == 0) return Bound::pos_inf();
        if (k == 1) return Bound::neg_inf();
        return kind(rng) % 2 ? Bound::le(val(rng)) : Bound::lt(val(rng));
    };
    for (int i = 0; i < 2000; ++i) {
        Bound a = random_bound(), b = random_bound(), c = random_bound();
        // total order
        CHECK(((a < b) || (b < a) || (a == b)));
        bool defined_ab = !(a.is_pos_inf() && b.is_neg_inf()) && !(a.is_neg_inf() && b.is_pos_inf());
        if (defined_ab) {
            CHECK(bound_add(a, b) == bound_add(b, a));
            CHECK(bound_add(a, bound_zero()) == a);
            // monotonicity in the left argument
            if (!(c.is_pos_inf() && b.is_neg_inf()) && !(c.is_neg_inf() && b.is_pos_inf())) {
                if (a <= c) CHECK(bound_add(a, b) <= bound_add(c, b));
            }
        }
    }
}
