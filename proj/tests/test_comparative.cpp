#include <doctest.h>

#include "pulveriser/comparative.hpp"

using namespace pulveriser;
using namespace pulveriser::comparative;

namespace {

std::vector<Integer> trial_division_primes(long limit) {
    std::vector<Integer> primes;
    for (long n = 2; n <= limit; ++n) {
        bool prime = true;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) primes.push_back(n);
    }
    return primes;
}

std::vector<Rational> units(std::initializer_list<long> denominators) {
    std::vector<Rational> out;
    for (long d : denominators) out.push_back(rational_make(1, d));
    return out;
}

} // namespace

TEST_CASE("egyptian greedy decomposition") {
    CHECK(egyptian_decompose(rational_make(3, 7)).terms == units({3, 11, 231}));
    CHECK(egyptian_decompose(rational_make(1, 2)).terms == units({2}));
    CHECK(egyptian_decompose(rational_make(4, 17)).terms == units({5, 29, 1233, 3039345}));
    CHECK_THROWS_AS(egyptian_decompose(Rational(0)), OutOfRange);
    CHECK_THROWS_AS(egyptian_decompose(Rational(1)), OutOfRange);
    CHECK_THROWS_AS(egyptian_decompose(rational_make(-1, 2)), OutOfRange);
}

TEST_CASE("egyptian terms rebuild the input, denominators increase") {
    for (long q = 2; q <= 50; ++q)
        for (long p = 1; p < q; ++p) {
            auto sum = egyptian_decompose(rational_make(p, q));
            CHECK(Integer(sum.terms.size()) <= p); // greedy numerator bound
            Rational total(0);
            Integer last_den = 0;
            for (const auto& t : sum.terms) {
                CHECK(t.num() == 1);
                CHECK(t.den() > last_den);
                last_den = t.den();
                total += t;
            }
            CHECK(total == rational_make(p, q));
        }
}

TEST_CASE("sieve matches trial division") {
    CHECK(sieve(30) == std::vector<Integer>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(sieve(1).empty());
    CHECK(sieve(0).empty());
    CHECK(sieve(2) == std::vector<Integer>{2});
    CHECK(sieve(2000) == trial_division_primes(2000));
}

TEST_CASE("euclid new-prime construction") {
    auto w = euclid_new_prime({2, 3, 5});
    CHECK(w.witness == 31);
    CHECK(w.new_prime == 31);

    w = euclid_new_prime({2});
    CHECK(w.witness == 3);
    CHECK(w.new_prime == 3);

    w = euclid_new_prime({2, 3, 5, 7, 11, 13});
    CHECK(w.witness == 30031);
    CHECK(w.new_prime == 59);
    CHECK(w.witness % w.new_prime == 0);

    CHECK_THROWS_AS(euclid_new_prime({4}), NotPrimeInput);
    CHECK_THROWS_AS(euclid_new_prime({2, 2}), NotPrimeInput);
    CHECK_THROWS_AS(euclid_new_prime({}), NotPrimeInput);
}

TEST_CASE("new prime never appears in the input") {
    std::vector<Integer> primes;
    for (const Integer& p : sieve(40)) {
        primes.push_back(p);
        auto w = euclid_new_prime(primes);
        CHECK(is_prime(w.new_prime));
        CHECK(w.witness % w.new_prime == 0);
        for (const Integer& q : primes) CHECK(w.new_prime != q);
    }
}
