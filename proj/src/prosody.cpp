#include "pulveriser/prosody.hpp"

namespace pulveriser::prosody {

namespace {

constexpr long kPrastaraCap = 20;
constexpr long kMatraCap = 25;

// x_str is the base rendered once up front; null for exp2's {n}-only events.
Integer exp_rec(const Integer& x, const Integer& n, const char* algorithm,
                const std::string* x_str, trace::Sink* sink, long& step) {
    if (sink && n > 0) {
        trace::TraceEvent e{algorithm, ++step, {}, {}};
        e.state.reserve(x_str ? 2 : 1);
        if (x_str) e.state.emplace_back("x", *x_str);
        e.state.emplace_back("n", n.str());
        sink->emit(e);
    }
    if (n == 0) return 1;
    Integer half = exp_rec(x, n / 2, algorithm, x_str, sink, step);
    Integer sq = half * half;
    return (n % 2 == 0) ? sq : sq * x;
}

Integer checked_exponent(const Integer& n) {
    if (n < 0) throw NegativeExponent("exponent must be >= 0");
    return n;
}

} // namespace

Integer cadence(const MeterPattern& p) {
    Integer total = 0;
    for (char c : p) total += (c == 'G') ? 2 : 1;
    return total;
}

MeterPattern pattern_parse(const std::string& text) {
    for (char c : text)
        if (c != 'G' && c != 'L')
            throw std::runtime_error("pattern must be over {G, L}: " + text);
    return text;
}

Integer exp2(const Integer& n, trace::Sink* sink) {
    checked_exponent(n);
    long step = 0;
    if (sink && n == 0) sink->emit({"exp2", ++step, {{"n", "0"}}, "base"});
    return exp_rec(2, n, "exp2", nullptr, sink, step);
}

Integer exp(const Integer& x, const Integer& n, trace::Sink* sink) {
    checked_exponent(n);
    long step = 0;
    if (sink && n == 0)
        sink->emit({"exp", ++step, {{"x", x.str()}, {"n", "0"}}, "base"});
    std::string x_str = sink ? x.str() : std::string();
    return exp_rec(x, n, "exp", &x_str, sink, step);
}

std::vector<MeterPattern> enumerate_prastara(const Integer& n) {
    if (n < 0 || n > kPrastaraCap)
        throw LengthOutOfRange("prastara length must be in [0, 20]");
    long len = n.convert_to<long>();
    std::vector<MeterPattern> rows;
    MeterPattern row(static_cast<size_t>(len), 'G');
    rows.push_back(row);
    while (true) {
        auto g = row.find('G');
        if (g == std::string::npos) break;
        row[g] = 'L';
        for (size_t i = 0; i < g; ++i) row[i] = 'G';
        rows.push_back(row);
    }
    return rows;
}

MeterPattern index_to_pattern(const Integer& i, const Integer& n) {
    if (n < 0 || i < 1 || i > exp2(n))
        throw IndexOutOfRange("row index must be in [1, 2^n]");
    long len = n.convert_to<long>();
    Integer bits = i - 1;
    MeterPattern p;
    p.reserve(static_cast<size_t>(len));
    for (long pos = 0; pos < len; ++pos) {
        p.push_back(bits % 2 == 1 ? 'L' : 'G');
        bits /= 2;
    }
    return p;
}

Integer pattern_to_index(const MeterPattern& p) {
    Integer index = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        index *= 2;
        if (*it == 'L') index += 1;
    }
    return index + 1;
}

Integer matra_count(const Integer& n) {
    if (n < 0) throw NegativeCadence("cadence must be >= 0");
    Integer prev = 1, cur = 1; // F_0, F_1
    for (Integer i = 2; i <= n; ++i) {
        Integer next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return n == 0 ? prev : cur;
}

std::vector<MeterPattern> enumerate_matra(const Integer& n) {
    if (n < 0 || n > kMatraCap)
        throw CadenceOutOfRange("cadence must be in [0, 25]");
    long target = n.convert_to<long>();
    // memo[c] lists patterns of cadence c, Laghu branch first.
    std::vector<std::vector<MeterPattern>> memo(static_cast<size_t>(target) + 1);
    memo[0] = {""};
    if (target >= 1) memo[1] = {"L"};
    for (long c = 2; c <= target; ++c) {
        auto& out = memo[static_cast<size_t>(c)];
        for (const auto& rest : memo[static_cast<size_t>(c - 1)]) out.push_back("L" + rest);
        for (const auto& rest : memo[static_cast<size_t>(c - 2)]) out.push_back("G" + rest);
    }
    return memo[static_cast<size_t>(target)];
}

std::vector<Integer> meru_row(const Integer& n) {
    if (n < 0) throw NegativeRow("row index must be >= 0");
    std::vector<Integer> row{1};
    for (Integer i = 1; i <= n; ++i) {
        std::vector<Integer> next(row.size() + 1, 1);
        for (size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
    return row;
}

Rational points_share(const Integer& r, const Integer& s) {
    if (r < 1 || s < 1) throw InvalidWins("both players must still need >= 1 win");
    Integer rounds = r + s - 1;
    std::vector<Integer> row = meru_row(rounds);
    Integer favorable = 0;
    for (Integer j = r; j <= rounds; ++j)
        favorable += row[j.convert_to<size_t>()];
    return Rational(favorable, exp2(rounds));
}

} // namespace pulveriser::prosody
