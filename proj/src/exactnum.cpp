#include "pulveriser/exactnum.hpp"

namespace pulveriser {

Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a), y = abs(b);
    while (y != 0) {
        Integer r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    if (b == 0) {
        if (a < 0) return {-a, -1, 0};
        if (a == 0) return {0, 0, 0};
        return {a, 1, 0};
    }
    Integer q = a / b;
    Integer r = a - q * b;
    ExtendedGcd sub = extended_gcd(b, r);
    // g = b*x' + r*y' = b*x' + (a - q*b)*y' = a*y' + b*(x' - q*y')
    return {sub.g, sub.y, sub.x - q * sub.y};
}

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw ZeroDenominator();
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Integer g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw ZeroDivisor("division of rationals by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational rational_parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer n(text.substr(0, slash));
        Integer d(text.substr(slash + 1));
        return Rational(std::move(n), std::move(d));
    } catch (const ZeroDenominator&) {
        throw;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed rational: " + text);
    }
}

} // namespace pulveriser
