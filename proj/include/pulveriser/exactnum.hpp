#pragma once

#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "pulveriser/errors.hpp"

namespace pulveriser {

// Arbitrary-precision signed integer. Every quantity in the library lives
// on this substrate; there is no fixed-width fast path anywhere.
using Integer = boost::multiprecision::cpp_int;

// gcd(a, b) >= 0 for all signs; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

struct ExtendedGcd {
    Integer g; // gcd(a, b), >= 0
    Integer x;
    Integer y; // a*x + b*y = g
};

// Coefficients of the classical Euclidean recursion, no post-hoc
// minimization. Base case: extended_gcd(a, 0) = (|a|, sgn(a), 0).
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Exact fraction, always stored reduced with positive denominator.
// Zero is canonically 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d); // throws ZeroDenominator if d == 0

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws ZeroDivisor

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

private:
    void reduce();

    Integer num_;
    Integer den_;
};

inline Rational rational_make(Integer n, Integer d) {
    return Rational(std::move(n), std::move(d));
}

// Parses "p" or "p/q" in decimal. Throws ZeroDenominator for q == 0 and
// std::runtime_error for malformed text.
Rational rational_parse(const std::string& text);

} // namespace pulveriser
