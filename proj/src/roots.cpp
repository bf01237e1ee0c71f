#include "pulveriser/roots.hpp"

#include <algorithm>

namespace pulveriser::roots {

namespace {

void check_positive(const Rational& N, const Rational& x) {
    if (N.sign() <= 0 || x.sign() <= 0)
        throw NonPositiveInput("N and x must be > 0");
}

} // namespace

SqrtResult aryabhata_sqrt(const Integer& N, const Integer& base, trace::Sink* sink) {
    if (N < 0) throw NegativeRadicand("radicand must be >= 0");
    if (base < 2) throw InvalidBase("base must be >= 2");

    Integer group_radix = base * base;
    std::vector<Integer> groups; // most significant first
    for (Integer rest = N; rest > 0; rest /= group_radix)
        groups.push_back(rest % group_radix);
    std::reverse(groups.begin(), groups.end());

    SqrtResult result{0, 0, {}};
    Integer processed = 0;
    long step = 0;
    for (const Integer& group : groups) {
        processed = processed * group_radix + group;
        Integer rem = result.remainder * group_radix + group;
        // largest d in [0, base) with (2*base*root + d)*d <= rem
        Integer lo = 0, hi = base - 1;
        Integer doubled = 2 * base * result.root;
        while (lo < hi) {
            Integer mid = (lo + hi + 1) / 2;
            if ((doubled + mid) * mid <= rem) lo = mid; else hi = mid - 1;
        }
        rem -= (doubled + lo) * lo;
        result.root = result.root * base + lo;
        result.remainder = rem;
        result.states.push_back({processed, result.root, rem});
        if (sink)
            sink->emit({"aryabhata_sqrt", ++step,
                        {{"processed", processed.str()},
                         {"root", result.root.str()},
                         {"remainder", rem.str()}},
                        {}});
    }
    return result;
}

Rational heron_step(const Rational& N, const Rational& x) {
    check_positive(N, x);
    return (x + N / x) * Rational(1, 2);
}

Rational bakhshali_step(const Rational& N, const Rational& x) {
    check_positive(N, x);
    Rational e = (N - x * x) / (Rational(2) * x);
    Rational h = x + e;
    if (h.is_zero()) throw ZeroDivisor("degenerate Bakhshali step"); // unreachable for N, x > 0
    return h - e * e / (Rational(2) * h);
}

std::vector<IterationStep> iterate(Method method, const Rational& N,
                                   const Rational& x0, const Integer& steps,
                                   trace::Sink* sink) {
    check_positive(N, x0);
    if (steps < 0) throw NonPositiveInput("steps must be >= 0");
    const char* name = method == Method::Heron ? "heron" : "bakhshali";

    std::vector<IterationStep> out;
    Rational x = x0;
    for (Integer i = 0; i <= steps; ++i) {
        Rational err = (x * x - N).abs();
        out.push_back({i, x, err});
        if (sink)
            sink->emit({name, i.convert_to<long>() + 1,
                        {{"index", i.str()},
                         {"estimate", x.str()},
                         {"error", err.str()}},
                        {}});
        if (i < steps)
            x = method == Method::Heron ? heron_step(N, x) : bakhshali_step(N, x);
    }
    return out;
}

} // namespace pulveriser::roots
