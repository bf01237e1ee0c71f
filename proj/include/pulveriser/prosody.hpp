#pragma once

#include <string>
#include <vector>

#include "pulveriser/exactnum.hpp"
#include "pulveriser/trace.hpp"

namespace pulveriser::prosody {

enum class Syllable : char { Guru = 'G', Laghu = 'L' };

inline int weight(Syllable s) { return s == Syllable::Guru ? 2 : 1; }

// Text form of a meter pattern: string over {G, L}, leftmost syllable first.
using MeterPattern = std::string;

// Sum of syllable weights (Guru = 2, Laghu = 1).
Integer cadence(const MeterPattern& p);

// Validates the {G, L} alphabet; throws std::runtime_error otherwise.
MeterPattern pattern_parse(const std::string& text);

// 2^n by recursive halving of the exponent. One trace event per halving
// level (state {n}); the event count is the recursion depth, at most
// floor(log2 n) + 1 for n >= 1.
Integer exp2(const Integer& n, trace::Sink* sink = nullptr);

// x^n by the same recursion with base x; exp(x, 0) = 1 including x = 0.
// Trace state {x, n} per level.
Integer exp(const Integer& x, const Integer& n, trace::Sink* sink = nullptr);

// All 2^n patterns of length n in prastara order: first row all-Guru, each
// next row flips the leftmost Guru to Laghu and resets everything left of
// it to Guru. n capped at 20.
std::vector<MeterPattern> enumerate_prastara(const Integer& n);

// Row i of the prastara without enumerating (nashta): i-1 in binary,
// least-significant bit first, 1 -> Laghu, padded with Guru.
MeterPattern index_to_pattern(const Integer& i, const Integer& n);

// Inverse of index_to_pattern (uddishta); 1-based row index.
Integer pattern_to_index(const MeterPattern& p);

// Number of patterns with cadence exactly n: F_n = F_{n-1} + F_{n-2},
// F_0 = F_1 = 1.
Integer matra_count(const Integer& n);

// All patterns of cadence exactly n, Laghu branch before Guru branch at
// every level. n capped at 25.
std::vector<MeterPattern> enumerate_matra(const Integer& n);

// [C(n,0) ... C(n,n)] by the additive recurrence only, no factorials.
std::vector<Integer> meru_row(const Integer& n);

// Stake share of the player needing r more wins against one needing s,
// fair rounds: sum_{j=r}^{r+s-1} C(r+s-1, j) / 2^(r+s-1).
Rational points_share(const Integer& r, const Integer& s);

} // namespace pulveriser::prosody
