#include "pulveriser/triples.hpp"

#include <algorithm>

namespace pulveriser::triples {

Rational pothayanar_estimate(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw NonPositiveInput("pothayanar_estimate needs a > 0 and b > 0");
    return a * Rational(7, 8) + b * Rational(1, 2);
}

bool pothayanar_is_exact(const Integer& a, const Integer& b) {
    if (a <= 0 || b <= 0)
        throw NonPositiveInput("pothayanar_is_exact needs a > 0 and b > 0");
    Rational est = pothayanar_estimate(Rational(a), Rational(b));
    return est * est == Rational(a * a + b * b);
}

Triple katyayana_triple(const GeneratorPair& g) {
    if (g.n < 1 || g.m <= g.n)
        throw InvalidGenerators("katyayana_triple needs m > n >= 1");
    Integer m2 = g.m * g.m, n2 = g.n * g.n;
    return {m2 - n2, 2 * g.m * g.n, m2 + n2};
}

std::vector<Triple> enumerate_primitive_triples(const Integer& c_max) {
    std::vector<Triple> out;
    // c = m^2 + n^2 <= c_max bounds the generator sweep.
    for (Integer m = 2; m * m + 1 <= c_max; ++m) {
        for (Integer n = 1; n < m; ++n) {
            if (m * m + n * n > c_max) break;
            if ((m + n) % 2 == 0) continue; // same parity -> non-primitive
            if (gcd(m, n) != 1) continue;
            Triple t = katyayana_triple({m, n});
            if (t.a % 2 == 0) std::swap(t.a, t.b); // odd leg first
            out.push_back(std::move(t));
        }
    }
    std::sort(out.begin(), out.end(), [](const Triple& l, const Triple& r) {
        return l.c != r.c ? l.c < r.c : l.a < r.a;
    });
    return out;
}

} // namespace pulveriser::triples
