#pragma once

#include <vector>

#include "pulveriser/exactnum.hpp"
#include "pulveriser/trace.hpp"

namespace pulveriser::roots {

// One digit-group step of the digit-by-digit root: processed is the value
// of the digit groups consumed so far, and processed = root^2 + remainder
// with 0 <= remainder <= 2*root.
struct RootState {
    Integer processed;
    Integer root;
    Integer remainder;
};

struct SqrtResult {
    Integer root;      // floor(sqrt(N))
    Integer remainder; // N - root^2
    std::vector<RootState> states; // one per digit group
};

// Digit-by-digit square root in the given base, most significant group
// first, consuming base^2-sized digit groups. At each step picks the
// largest digit d with (2*base*root + d)*d <= running remainder.
SqrtResult aryabhata_sqrt(const Integer& N, const Integer& base = 10,
                          trace::Sink* sink = nullptr);

// (x + N/x) / 2, exact.
Rational heron_step(const Rational& N, const Rational& x);

// With e = (N - x^2)/(2x) and h = x + e, returns h - e^2/(2h). Equals two
// Heron steps from x, exactly.
Rational bakhshali_step(const Rational& N, const Rational& x);

enum class Method { Heron, Bakhshali };

struct IterationStep {
    Integer index;        // 0-based; 0 is the seed
    Rational estimate;
    Rational error_bound; // |estimate^2 - N|, exact
};

// Iterate sequence including the seed: steps + 1 entries.
std::vector<IterationStep> iterate(Method method, const Rational& N,
                                   const Rational& x0, const Integer& steps,
                                   trace::Sink* sink = nullptr);

} // namespace pulveriser::roots
