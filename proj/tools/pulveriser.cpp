// pulveriser: command-line surface over the exact-arithmetic library.
// Grammar: pulveriser <subcommand> <args...> [--json] [--trace[=PATH]] [--base B]
// Exit codes: 0 success, 2 usage error, 3 domain error (name on stderr).

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pulveriser/comparative.hpp"
#include "pulveriser/diophantine.hpp"
#include "pulveriser/exactnum.hpp"
#include "pulveriser/prosody.hpp"
#include "pulveriser/roots.hpp"
#include "pulveriser/trace.hpp"
#include "pulveriser/triples.hpp"

namespace {

using namespace pulveriser;
using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string subcommand;
    std::vector<std::string> args;
    bool json = false;
    bool trace = false;
    std::optional<std::string> trace_path;
    Integer base = 10;
};

Options parse_argv(int argc, char** argv) {
    Options opt;
    if (argc < 2) throw UsageError("missing subcommand");
    opt.subcommand = argv[1];
    for (int i = 2; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--json") {
            opt.json = true;
        } else if (arg == "--trace") {
            opt.trace = true;
        } else if (arg.rfind("--trace=", 0) == 0) {
            opt.trace = true;
            opt.trace_path = arg.substr(8);
        } else if (arg == "--base") {
            if (++i >= argc) throw UsageError("--base needs a value");
            opt.base = Integer(std::string(argv[i]));
        } else if (arg.rfind("--", 0) == 0) {
            throw UsageError("unknown option: " + arg);
        } else {
            opt.args.push_back(arg);
        }
    }
    return opt;
}

Integer arg_int(const Options& opt, size_t i) {
    if (i >= opt.args.size()) throw UsageError("missing argument");
    try {
        return Integer(opt.args[i]);
    } catch (const std::exception&) {
        throw UsageError("not an integer: " + opt.args[i]);
    }
}

Rational arg_rat(const Options& opt, size_t i) {
    if (i >= opt.args.size()) throw UsageError("missing argument");
    try {
        return rational_parse(opt.args[i]);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("not a rational: " + opt.args[i]);
    }
}

void need_args(const Options& opt, size_t n) {
    if (opt.args.size() != n)
        throw UsageError(opt.subcommand + " expects " + std::to_string(n) + " argument(s)");
}

void print_iteration(const std::vector<roots::IterationStep>& steps, bool json) {
    if (json) {
        ordered_json out = ordered_json::array();
        for (const auto& s : steps)
            out.push_back({{"index", s.index.str()},
                           {"estimate", s.estimate.str()},
                           {"error", s.error_bound.str()}});
        std::cout << out.dump() << "\n";
        return;
    }
    for (const auto& s : steps)
        std::cout << s.index << " " << s.estimate.str() << " " << s.error_bound.str() << "\n";
}

int run(const Options& opt) {
    // Trace stream: PATH as plain JSON lines, or stdout-interleaved with a
    // "TRACE " prefix.
    std::ofstream trace_file;
    std::unique_ptr<trace::JsonLinesSink> sink;
    if (opt.trace) {
        if (opt.trace_path) {
            trace_file.open(*opt.trace_path);
            if (!trace_file) throw UsageError("cannot open trace file: " + *opt.trace_path);
            sink = std::make_unique<trace::JsonLinesSink>(trace_file);
        } else {
            sink = std::make_unique<trace::JsonLinesSink>(std::cout, "TRACE ");
        }
    }
    trace::Sink* tr = sink.get();
    const std::string& sub = opt.subcommand;

    if (sub == "triples") {
        need_args(opt, 1);
        auto list = triples::enumerate_primitive_triples(arg_int(opt, 0));
        if (opt.json) {
            ordered_json out = ordered_json::array();
            for (const auto& t : list)
                out.push_back({{"a", t.a.str()}, {"b", t.b.str()}, {"c", t.c.str()}});
            std::cout << out.dump() << "\n";
        } else {
            for (const auto& t : list)
                std::cout << t.a << " " << t.b << " " << t.c << "\n";
        }
    } else if (sub == "pothayanar") {
        need_args(opt, 2);
        Rational a = arg_rat(opt, 0), b = arg_rat(opt, 1);
        Rational est = triples::pothayanar_estimate(a, b);
        std::optional<bool> exact;
        if (a.is_integer() && b.is_integer())
            exact = triples::pothayanar_is_exact(a.num(), b.num());
        if (opt.json) {
            ordered_json out{{"estimate", est.str()}};
            if (exact) out["exact"] = *exact;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << est.str();
            if (exact) std::cout << (*exact ? " exact" : " inexact");
            std::cout << "\n";
        }
    } else if (sub == "prastara") {
        need_args(opt, 1);
        auto rows = prosody::enumerate_prastara(arg_int(opt, 0));
        if (opt.json) {
            std::cout << ordered_json(rows).dump() << "\n";
        } else {
            for (const auto& r : rows) std::cout << r << "\n";
        }
    } else if (sub == "nashta") {
        need_args(opt, 2);
        auto p = prosody::index_to_pattern(arg_int(opt, 0), arg_int(opt, 1));
        if (opt.json) std::cout << ordered_json{{"pattern", p}}.dump() << "\n";
        else std::cout << p << "\n";
    } else if (sub == "uddishta") {
        need_args(opt, 1);
        prosody::MeterPattern p;
        try {
            p = prosody::pattern_parse(opt.args[0]);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        Integer i = prosody::pattern_to_index(p);
        if (opt.json) std::cout << ordered_json{{"index", i.str()}}.dump() << "\n";
        else std::cout << i << "\n";
    } else if (sub == "matra") {
        need_args(opt, 1);
        Integer n = arg_int(opt, 0);
        Integer count = prosody::matra_count(n);
        std::optional<std::vector<prosody::MeterPattern>> patterns;
        if (n <= 25) patterns = prosody::enumerate_matra(n);
        if (opt.json) {
            ordered_json out{{"count", count.str()}};
            if (patterns) out["patterns"] = *patterns;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << count << "\n";
            if (patterns)
                for (const auto& p : *patterns) std::cout << p << "\n";
        }
    } else if (sub == "meru") {
        need_args(opt, 1);
        auto row = prosody::meru_row(arg_int(opt, 0));
        if (opt.json) {
            ordered_json out = ordered_json::array();
            for (const auto& v : row) out.push_back(v.str());
            std::cout << out.dump() << "\n";
        } else {
            for (size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? " " : "") << row[i];
            std::cout << "\n";
        }
    } else if (sub == "exp") {
        need_args(opt, 2);
        Integer x = arg_int(opt, 0), n = arg_int(opt, 1);
        Integer v = x == 2 ? prosody::exp2(n, tr) : prosody::exp(x, n, tr);
        if (opt.json) std::cout << ordered_json{{"value", v.str()}}.dump() << "\n";
        else std::cout << v << "\n";
    } else if (sub == "points") {
        need_args(opt, 2);
        Rational share = prosody::points_share(arg_int(opt, 0), arg_int(opt, 1));
        if (opt.json) std::cout << ordered_json{{"share", share.str()}}.dump() << "\n";
        else std::cout << share.str() << "\n";
    } else if (sub == "sqrt") {
        need_args(opt, 1);
        auto r = roots::aryabhata_sqrt(arg_int(opt, 0), opt.base, tr);
        if (opt.json)
            std::cout << ordered_json{{"root", r.root.str()},
                                      {"remainder", r.remainder.str()}}.dump() << "\n";
        else
            std::cout << r.root << " remainder " << r.remainder << "\n";
    } else if (sub == "heron" || sub == "bakhshali") {
        need_args(opt, 3);
        auto method = sub == "heron" ? roots::Method::Heron : roots::Method::Bakhshali;
        auto steps = roots::iterate(method, arg_rat(opt, 0), arg_rat(opt, 1), arg_int(opt, 2), tr);
        print_iteration(steps, opt.json);
    } else if (sub == "kuttaka") {
        need_args(opt, 3);
        auto s = diophantine::kuttaka(arg_int(opt, 0), arg_int(opt, 1), arg_int(opt, 2));
        if (opt.json)
            std::cout << ordered_json{{"x", s.x.str()},
                                      {"y", s.y.str()},
                                      {"x_period", s.x_period.str()},
                                      {"y_period", s.y_period.str()},
                                      {"g", s.g.str()}}.dump() << "\n";
        else
            std::cout << "x=" << s.x << " y=" << s.y << " x_period=" << s.x_period
                      << " y_period=" << s.y_period << " g=" << s.g << "\n";
    } else if (sub == "chakravala") {
        need_args(opt, 1);
        auto r = diophantine::chakravala(arg_int(opt, 0), tr);
        if (opt.json)
            std::cout << ordered_json{{"x", r.solution.x.str()},
                                      {"y", r.solution.y.str()},
                                      {"steps", std::to_string(r.states.size() - 1)}}.dump() << "\n";
        else
            std::cout << "x=" << r.solution.x << " y=" << r.solution.y << "\n";
    } else if (sub == "egyptian") {
        need_args(opt, 1);
        Rational q = arg_rat(opt, 0);
        if (q.sign() <= 0) throw OutOfRange("egyptian needs q > 0");
        // split off the integer part; the decomposition itself lives on (0,1)
        Integer whole = q.num() / q.den();
        Rational frac = q - Rational(whole);
        std::vector<Rational> terms;
        if (!frac.is_zero()) terms = comparative::egyptian_decompose(frac, tr).terms;
        if (opt.json) {
            ordered_json jterms = ordered_json::array();
            for (const auto& t : terms) jterms.push_back(t.str());
            std::cout << ordered_json{{"integer_part", whole.str()},
                                      {"terms", jterms}}.dump() << "\n";
        } else {
            std::string sep;
            if (whole != 0) {
                std::cout << whole;
                sep = " + ";
            }
            for (const auto& t : terms) {
                std::cout << sep << t.str();
                sep = " + ";
            }
            if (whole == 0 && terms.empty()) std::cout << "0";
            std::cout << "\n";
        }
    } else if (sub == "sieve") {
        need_args(opt, 1);
        auto primes = comparative::sieve(arg_int(opt, 0));
        if (opt.json) {
            ordered_json out = ordered_json::array();
            for (const auto& p : primes) out.push_back(p.str());
            std::cout << out.dump() << "\n";
        } else {
            for (size_t i = 0; i < primes.size(); ++i)
                std::cout << (i ? " " : "") << primes[i];
            std::cout << "\n";
        }
    } else if (sub == "euclid") {
        if (opt.args.empty()) throw UsageError("euclid expects at least one prime");
        std::vector<Integer> primes;
        for (size_t i = 0; i < opt.args.size(); ++i) primes.push_back(arg_int(opt, i));
        auto w = comparative::euclid_new_prime(primes);
        if (opt.json)
            std::cout << ordered_json{{"witness", w.witness.str()},
                                      {"new_prime", w.new_prime.str()}}.dump() << "\n";
        else
            std::cout << "witness=" << w.witness << " new_prime=" << w.new_prime << "\n";
    } else {
        throw UsageError("unknown subcommand: " + sub);
    }

    if (sink) sink->close();
    return 0;
}

const char* kUsage =
    "usage: pulveriser <subcommand> <args...> [--json] [--trace[=PATH]] [--base B]\n"
    "subcommands:\n"
    "  triples C_MAX            primitive Pythagorean triples with c <= C_MAX\n"
    "  pothayanar A B           hypotenuse estimate 7A/8 + B/2 (rationals ok)\n"
    "  prastara N               all length-N guru/laghu patterns in order\n"
    "  nashta I N               pattern at row I of the length-N prastara\n"
    "  uddishta PATTERN         row index of a pattern (string over G/L)\n"
    "  matra N                  count (and list, N <= 25) of cadence-N patterns\n"
    "  meru N                   row N of the binomial triangle\n"
    "  exp X N                  X^N by recursive halving\n"
    "  points R S               stake share, player needing R wins vs S\n"
    "  sqrt N [--base B]        digit-by-digit integer square root\n"
    "  heron N X0 STEPS         Heron iteration from X0\n"
    "  bakhshali N X0 STEPS     Bakhshali iteration from X0\n"
    "  kuttaka A B C            canonical solution of Ax + By = C\n"
    "  chakravala N             fundamental solution of x^2 - N y^2 = 1\n"
    "  egyptian P/Q             greedy unit-fraction decomposition\n"
    "  sieve LIMIT              primes up to LIMIT\n"
    "  euclid P1 [P2 ...]       Euclid's new-prime construction\n";

} // namespace

int main(int argc, char** argv) {
    try {
        return run(parse_argv(argc, argv));
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << kUsage;
        return 2;
    } catch (const DomainError& e) {
        std::cerr << e.name() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
