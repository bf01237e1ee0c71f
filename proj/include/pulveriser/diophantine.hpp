#pragma once

#include <vector>

#include "pulveriser/exactnum.hpp"
#include "pulveriser/trace.hpp"

namespace pulveriser::diophantine {

// Canonical solution of a*x + b*y = c. The full solution set is
// {(x + t*x_period, y - t*y_period) : t integer}; x is the minimal
// non-negative representative when x_period != 0.
struct KuttakaSolution {
    Integer x;
    Integer y;
    Integer x_period; // b/g
    Integer y_period; // a/g (0 when b = 0; y is then pinned to 0)
    Integer g;        // gcd(a, b)
};

// Throws NotSolvable when gcd(a,b) does not divide c, DegenerateInput when
// a = b = 0.
KuttakaSolution kuttaka(const Integer& a, const Integer& b, const Integer& c);

// One station of the cycle: a^2 - N*b^2 = k with gcd(a, b) = 1; m is the
// multiplier chosen to reach this state (0 for the initial state).
struct ChakravalaState {
    Integer a;
    Integer b;
    Integer k;
    Integer m;
};

struct PellSolution {
    Integer x;
    Integer y;
    Integer N; // x^2 - N*y^2 = 1
};

struct ChakravalaResult {
    PellSolution solution;
    std::vector<ChakravalaState> states; // initialization through k = 1
};

// The cyclic method for x^2 - N*y^2 = 1. Starts from b = 1 and the a
// minimizing |a^2 - N|; each step picks the m >= 1 with a + b*m divisible
// by |k| that minimizes |m^2 - N| (ties to the larger m). Throws
// PerfectSquare / InvalidModulus.
ChakravalaResult chakravala(const Integer& N, trace::Sink* sink = nullptr);

// Brahmagupta composition (samasa): combines two states for the same N
// into (a1*a2 + N*b1*b2, a1*b2 + a2*b1, k1*k2). Test oracle for the cycle
// step; m of the result is 0.
ChakravalaState brahmagupta_compose(const ChakravalaState& s1,
                                    const ChakravalaState& s2,
                                    const Integer& N);

} // namespace pulveriser::diophantine
