#pragma once

#include <vector>

#include "pulveriser/exactnum.hpp"

namespace pulveriser::triples {

struct Triple {
    Integer a; // leg
    Integer b; // leg
    Integer c; // hypotenuse

    friend bool operator==(const Triple& l, const Triple& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
};

struct GeneratorPair {
    Integer m;
    Integer n; // m > n >= 1
};

// The empirical hypotenuse rule c = 7a/8 + b/2, exactly as written: the
// argument order is significant, no reordering of the legs.
Rational pothayanar_estimate(const Rational& a, const Rational& b);

// True iff the estimate squared equals a^2 + b^2, i.e. a:b is 4:3 or 12:5.
bool pothayanar_is_exact(const Integer& a, const Integer& b);

// (m^2 - n^2, 2mn, m^2 + n^2). Primitive iff gcd(m,n) = 1 and m, n have
// opposite parity.
Triple katyayana_triple(const GeneratorPair& g);

// Every primitive triple with c <= c_max, odd leg first, sorted by (c, a).
std::vector<Triple> enumerate_primitive_triples(const Integer& c_max);

} // namespace pulveriser::triples
