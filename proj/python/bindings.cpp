#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pulveriser/comparative.hpp"
#include "pulveriser/diophantine.hpp"
#include "pulveriser/exactnum.hpp"
#include "pulveriser/prosody.hpp"
#include "pulveriser/roots.hpp"
#include "pulveriser/triples.hpp"

namespace py = pybind11;
using namespace pulveriser;

namespace pybind11::detail {

// cpp_int <-> python int, via the decimal string form (exact at any size).
template <>
struct type_caster<Integer> {
    PYBIND11_TYPE_CASTER(Integer, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = Integer(static_cast<std::string>(py::str(src)));
        return true;
    }

    static handle cast(const Integer& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

// Rational <-> fractions.Fraction (plain ints load as integral rationals).
template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("Fraction"));

    bool load(handle src, bool convert) {
        if (PyLong_Check(src.ptr())) {
            value = Rational(Integer(static_cast<std::string>(py::str(src))));
            return true;
        }
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator"))
            return false;
        make_caster<Integer> num, den;
        if (!num.load(src.attr("numerator"), convert)) return false;
        if (!den.load(src.attr("denominator"), convert)) return false;
        value = Rational(cast_op<Integer>(num), cast_op<Integer>(den));
        return true;
    }

    static handle cast(const Rational& v, return_value_policy policy, handle parent) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::object num = py::reinterpret_steal<py::object>(
            make_caster<Integer>::cast(v.num(), policy, parent));
        py::object den = py::reinterpret_steal<py::object>(
            make_caster<Integer>::cast(v.den(), policy, parent));
        return fraction(num, den).release();
    }
};

} // namespace pybind11::detail

namespace {

void register_errors(py::module_& m) {
    static py::exception<DomainError> exc(m, "DomainError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            exc(( e.name() + ": " + e.what()).c_str());
        }
    });
}

} // namespace

PYBIND11_MODULE(_pulveriser, m) {
    m.doc() = "Exact-arithmetic classical algorithms: triples, prosody, roots, "
              "indeterminate equations, and the comparative set.";
    register_errors(m);

    m.def("gcd", &gcd, py::arg("a"), py::arg("b"));
    m.def("extended_gcd", [](const Integer& a, const Integer& b) {
        auto r = extended_gcd(a, b);
        return py::make_tuple(r.g, r.x, r.y);
    }, py::arg("a"), py::arg("b"));
    m.def("rational_make", &rational_make, py::arg("n"), py::arg("d"));

    m.def("pothayanar_estimate", &triples::pothayanar_estimate, py::arg("a"), py::arg("b"));
    m.def("pothayanar_is_exact", &triples::pothayanar_is_exact, py::arg("a"), py::arg("b"));
    m.def("katyayana_triple", [](const Integer& m_, const Integer& n) {
        auto t = triples::katyayana_triple({m_, n});
        return py::make_tuple(t.a, t.b, t.c);
    }, py::arg("m"), py::arg("n"));
    m.def("enumerate_primitive_triples", [](const Integer& c_max) {
        py::list out;
        for (const auto& t : triples::enumerate_primitive_triples(c_max))
            out.append(py::make_tuple(t.a, t.b, t.c));
        return out;
    }, py::arg("c_max"));

    m.def("exp2", [](const Integer& n) { return prosody::exp2(n); }, py::arg("n"));
    m.def("exp", [](const Integer& x, const Integer& n) { return prosody::exp(x, n); },
          py::arg("x"), py::arg("n"));
    m.def("enumerate_prastara", &prosody::enumerate_prastara, py::arg("n"));
    m.def("index_to_pattern", &prosody::index_to_pattern, py::arg("i"), py::arg("n"));
    m.def("pattern_to_index", [](const std::string& p) {
        return prosody::pattern_to_index(prosody::pattern_parse(p));
    }, py::arg("pattern"));
    m.def("matra_count", &prosody::matra_count, py::arg("n"));
    m.def("enumerate_matra", &prosody::enumerate_matra, py::arg("n"));
    m.def("meru_row", &prosody::meru_row, py::arg("n"));
    m.def("points_share", &prosody::points_share, py::arg("r"), py::arg("s"));

    m.def("aryabhata_sqrt", [](const Integer& N, const Integer& base) {
        auto r = roots::aryabhata_sqrt(N, base);
        return py::make_tuple(r.root, r.remainder);
    }, py::arg("N"), py::arg("base") = Integer(10));
    m.def("heron_step", &roots::heron_step, py::arg("N"), py::arg("x"));
    m.def("bakhshali_step", &roots::bakhshali_step, py::arg("N"), py::arg("x"));
    m.def("iterate", [](const std::string& method, const Rational& N,
                        const Rational& x0, const Integer& steps) {
        auto mth = method == "heron" ? roots::Method::Heron : roots::Method::Bakhshali;
        py::list out;
        for (const auto& s : roots::iterate(mth, N, x0, steps))
            out.append(py::make_tuple(s.index, s.estimate, s.error_bound));
        return out;
    }, py::arg("method"), py::arg("N"), py::arg("x0"), py::arg("steps"));

    m.def("kuttaka", [](const Integer& a, const Integer& b, const Integer& c) {
        auto s = diophantine::kuttaka(a, b, c);
        py::dict out;
        out["x"] = py::cast(s.x);
        out["y"] = py::cast(s.y);
        out["x_period"] = py::cast(s.x_period);
        out["y_period"] = py::cast(s.y_period);
        out["g"] = py::cast(s.g);
        return out;
    }, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("chakravala", [](const Integer& N) {
        auto r = diophantine::chakravala(N);
        py::list states;
        for (const auto& s : r.states)
            states.append(py::make_tuple(s.a, s.b, s.k, s.m));
        return py::make_tuple(r.solution.x, r.solution.y, states);
    }, py::arg("N"));

    m.def("egyptian_decompose", [](const Rational& q) {
        return comparative::egyptian_decompose(q).terms;
    }, py::arg("q"));
    m.def("sieve", &comparative::sieve, py::arg("limit"));
    m.def("is_prime", &comparative::is_prime, py::arg("n"));
    m.def("euclid_new_prime", [](const std::vector<Integer>& primes) {
        auto w = comparative::euclid_new_prime(primes);
        return py::make_tuple(w.witness, w.new_prime);
    }, py::arg("primes"));
}
