#include "pulveriser/comparative.hpp"

#include <set>

namespace pulveriser::comparative {

UnitFractionSum egyptian_decompose(const Rational& q, trace::Sink* sink) {
    if (q.sign() <= 0 || q >= Rational(1))
        throw OutOfRange("egyptian_decompose needs 0 < q < 1");
    UnitFractionSum sum;
    Rational rest = q;
    long step = 0;
    while (!rest.is_zero()) {
        // ceil(den/num) for a positive rational num/den
        Integer d = (rest.den() + rest.num() - 1) / rest.num();
        Rational unit(1, d);
        rest -= unit;
        sum.terms.push_back(unit);
        if (sink)
            sink->emit({"egyptian", ++step,
                        {{"unit", unit.str()}, {"remaining", rest.str()}},
                        {}});
    }
    return sum;
}

std::vector<Integer> sieve(const Integer& limit) {
    std::vector<Integer> primes;
    if (limit < 2) return primes;
    size_t n = limit.convert_to<size_t>();
    std::vector<bool> composite(n + 1, false);
    for (size_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (size_t mult = p * p; mult <= n; mult += p) composite[mult] = true;
    }
    return primes;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (Integer d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

EuclidWitness euclid_new_prime(const std::vector<Integer>& primes) {
    if (primes.empty()) throw NotPrimeInput("input list is empty");
    std::set<Integer> seen;
    Integer product = 1;
    for (const Integer& p : primes) {
        if (!is_prime(p)) throw NotPrimeInput("not a prime: " + p.str());
        if (!seen.insert(p).second) throw NotPrimeInput("duplicate prime: " + p.str());
        product *= p;
    }
    EuclidWitness w;
    w.witness = product + 1;
    w.new_prime = w.witness;
    for (Integer d = 2; d * d <= w.witness; ++d) {
        if (w.witness % d == 0) {
            w.new_prime = d;
            break;
        }
    }
    return w;
}

} // namespace pulveriser::comparative
