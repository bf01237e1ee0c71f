#pragma once

#include <vector>

#include "pulveriser/exactnum.hpp"
#include "pulveriser/trace.hpp"

namespace pulveriser::comparative {

// Sum of distinct unit fractions with strictly increasing denominators;
// adds up exactly to the decomposed input.
struct UnitFractionSum {
    std::vector<Rational> terms;
};

// Greedy decomposition of q in (0, 1): repeatedly peel off
// 1/ceil(1/remaining). Terminates because numerators strictly decrease.
// Callers with q >= 1 split off the integer part first.
UnitFractionSum egyptian_decompose(const Rational& q, trace::Sink* sink = nullptr);

// Primes <= limit by composite marking from p^2 upward.
std::vector<Integer> sieve(const Integer& limit);

struct EuclidWitness {
    Integer witness;   // product of the input primes, plus one
    Integer new_prime; // smallest prime factor of the witness
};

// Euclid's infinitude-of-primes construction. The returned prime never
// appears in the input list. Throws NotPrimeInput if the input is empty
// or contains a non-prime or duplicate.
EuclidWitness euclid_new_prime(const std::vector<Integer>& primes);

// Trial division up to sqrt(n); n >= 2.
bool is_prime(const Integer& n);

} // namespace pulveriser::comparative
