#include <doctest.h>

#include <random>

#include "pulveriser/exactnum.hpp"

using namespace pulveriser;

namespace {

// Oracle: common divisors by enumeration.
Integer gcd_by_enumeration(long a, long b) {
    long aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
    if (aa == 0 && bb == 0) return 0;
    long bound = std::max(aa, bb);
    long best = 1;
    for (long d = 1; d <= bound; ++d)
        if ((aa == 0 || aa % d == 0) && (bb == 0 || bb % d == 0)) best = d;
    return best;
}

} // namespace

TEST_CASE("gcd matches divisor enumeration") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(12, 18) == gcd_by_enumeration(12, 18));
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(-4, 6) == 2);
    CHECK(gcd(-4, 6) == gcd_by_enumeration(-4, 6));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-100, 100);
    for (int i = 0; i < 500; ++i) {
        long a = dist(rng), b = dist(rng);
        CHECK(gcd(a, b) == gcd_by_enumeration(a, b));
    }
}

TEST_CASE("extended_gcd Bezout identity") {
    auto r = extended_gcd(240, 46);
    CHECK(r.g == 2);
    CHECK(r.x == -9);
    CHECK(r.y == 47);
    CHECK(Integer(240) * r.x + Integer(46) * r.y == r.g);

    r = extended_gcd(5, 0);
    CHECK(r.g == 5);
    CHECK(r.x == 1);
    CHECK(r.y == 0);

    r = extended_gcd(17, 5);
    CHECK(r.g == 1);
    CHECK(r.x == -2);
    CHECK(r.y == 7);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        Integer a = dist(rng), b = dist(rng);
        auto e = extended_gcd(a, b);
        CHECK(e.g == gcd(a, b));
        CHECK(e.g >= 0);
        CHECK(a * e.x + b * e.y == e.g);
    }
}

TEST_CASE("rational_make reduces and normalizes the sign") {
    CHECK(rational_make(6, -8) == rational_make(-3, 4));
    CHECK(rational_make(6, -8).num() == -3);
    CHECK(rational_make(6, -8).den() == 4);
    CHECK(rational_make(0, 5).str() == "0");
    CHECK(rational_make(0, 5).den() == 1);
    CHECK(rational_make(37, 8).str() == "37/8");
    CHECK_THROWS_AS(rational_make(1, 0), ZeroDenominator);
}

TEST_CASE("rational arithmetic stays reduced with positive denominator") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> dist(-50, 50);
    auto random_rational = [&] {
        long d = 0;
        while (d == 0) d = dist(rng);
        return rational_make(dist(rng), d);
    };
    for (int i = 0; i < 500; ++i) {
        Rational p = random_rational(), q = random_rational();
        for (Rational v : {p + q, p - q, p * q}) {
            CHECK(v.den() > 0);
            CHECK(gcd(v.num(), v.den()) == (v.num() == 0 ? v.den() : 1));
        }
        if (!q.is_zero()) {
            Rational v = p / q;
            CHECK(v.den() > 0);
            CHECK(v * q == p);
        }
    }
}

TEST_CASE("rational_make round-trip under common factors") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> dist(-30, 30);
    for (int i = 0; i < 500; ++i) {
        long n = dist(rng), d = dist(rng), t = dist(rng);
        if (d == 0 || t == 0) continue;
        CHECK(rational_make(Integer(n) * t, Integer(d) * t) == rational_make(n, d));
    }
}

TEST_CASE("rational_parse accepts p and p/q") {
    CHECK(rational_parse("3/7") == rational_make(3, 7));
    CHECK(rational_parse("-12") == Rational(-12));
    CHECK(rational_parse("6/-8") == rational_make(-3, 4));
    CHECK_THROWS_AS(rational_parse("1/0"), ZeroDenominator);
    CHECK_THROWS(rational_parse("seven"));
}
