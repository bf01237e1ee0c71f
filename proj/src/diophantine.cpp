#include "pulveriser/diophantine.hpp"

#include <cassert>

namespace pulveriser::diophantine {

namespace {

Integer floor_mod(const Integer& v, const Integer& m) {
    Integer r = v % m;
    return r < 0 ? r + m : r;
}

Integer abs_diff_from(const Integer& m, const Integer& N) {
    return abs(m * m - N);
}

} // namespace

KuttakaSolution kuttaka(const Integer& a, const Integer& b, const Integer& c) {
    if (a == 0 && b == 0) throw DegenerateInput("a and b cannot both be 0");
    ExtendedGcd eg = extended_gcd(a, b);
    if (c % eg.g != 0) throw NotSolvable("gcd(a, b) does not divide c");
    Integer scale = c / eg.g;

    KuttakaSolution sol;
    sol.g = eg.g;
    if (b == 0) {
        sol.x = c / a;
        sol.y = 0;
        sol.x_period = 0;
        sol.y_period = 0;
        return sol;
    }
    sol.x = eg.x * scale;
    sol.y = eg.y * scale;
    sol.x_period = b / eg.g;
    sol.y_period = a / eg.g;

    Integer p = abs(sol.x_period);
    Integer canonical = floor_mod(sol.x, p);
    Integer t = (canonical - sol.x) / sol.x_period;
    sol.x = canonical;
    sol.y -= t * sol.y_period;
    return sol;
}

ChakravalaResult chakravala(const Integer& N, trace::Sink* sink) {
    if (N < 2) throw InvalidModulus("N must be >= 2");
    Integer s = sqrt(N); // floor
    if (s * s == N) throw PerfectSquare("x^2 - N*y^2 = 1 has no y >= 1 for square N");

    auto record = [&](ChakravalaResult& r, ChakravalaState st) {
        if (sink)
            sink->emit({"chakravala", static_cast<long>(r.states.size()) + 1,
                        {{"a", st.a.str()},
                         {"b", st.b.str()},
                         {"k", st.k.str()},
                         {"m", st.m.str()}},
                        {}});
        r.states.push_back(std::move(st));
    };

    // initial a is the nearest integer to sqrt(N); a tie would need
    // a^2 + (a+1)^2 = 2N, impossible by parity
    Integer lo_gap = N - s * s, hi_gap = (s + 1) * (s + 1) - N;
    assert(lo_gap != hi_gap);
    Integer a = lo_gap < hi_gap ? s : s + 1;
    Integer b = 1;
    Integer k = a * a - N;

    ChakravalaResult result;
    record(result, {a, b, k, 0});

    while (k != 1) {
        Integer kk = abs(k);
        // m with a + b*m ≡ 0 (mod |k|); gcd(b, k) = 1 so b is invertible
        ExtendedGcd inv = extended_gcd(b, kk);
        assert(inv.g == 1);
        Integer m0 = floor_mod(-a * inv.x, kk);
        Integer first = m0 == 0 ? kk : m0; // smallest admissible m >= 1

        Integer m;
        if (first > s) {
            m = first;
        } else {
            Integer below = first + ((s - first) / kk) * kk;
            Integer above = below + kk;
            // tie goes to the larger candidate
            m = abs_diff_from(below, N) < abs_diff_from(above, N) ? below : above;
        }

        Integer next_a = a * m + N * b;
        Integer next_b = a + b * m;
        Integer next_k = m * m - N;
        assert(next_a % kk == 0 && next_b % kk == 0 && next_k % k == 0);
        a = next_a / kk;
        b = next_b / kk;
        k = next_k / k;
        record(result, {a, b, k, m});
    }

    result.solution = {a, b, N};
    return result;
}

ChakravalaState brahmagupta_compose(const ChakravalaState& s1,
                                    const ChakravalaState& s2,
                                    const Integer& N) {
    return {s1.a * s2.a + N * s1.b * s2.b,
            s1.a * s2.b + s2.a * s1.b,
            s1.k * s2.k,
            0};
}

} // namespace pulveriser::diophantine
