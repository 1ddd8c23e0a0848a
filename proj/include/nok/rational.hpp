#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

#include "nok/errors.hpp"

namespace nok {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction; the only scalar type of the engine.
///
/// Canonical form is maintained as a class invariant:
///  - denominator > 0,
///  - gcd(|numerator|, denominator) = 1,
///  - zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {} // NOLINT(google-explicit-constructor)
    explicit Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        normalize();
    }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    /// Parses "p/q" or "p", base 10, optional leading minus on p only.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZeroError();
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Canonical form makes fieldwise equality exact.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return !(b < a);
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return !(a < b);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(unsigned k) const {
        Rational acc(1), base = *this;
        while (k != 0) {
            if (k & 1u) acc *= base;
            base *= base;
            k >>= 1u;
        }
        return acc;
    }

    /// Serializes as "p/q", or "p" when q = 1.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

private:
    void normalize() {
        if (den_ == 0) throw DivisionByZeroError("rational with zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline Rational Rational::parse(std::string_view text) {
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    std::size_t i = 0;
    if (text.empty()) throw ParseError("empty rational literal", 0);
    bool neg = false;
    if (text[i] == '-') {
        neg = true;
        ++i;
    }
    std::size_t num_begin = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    if (i == num_begin) throw ParseError("expected digits in rational literal", i);
    BigInt num(std::string(text.substr(num_begin, i - num_begin)));
    BigInt den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && is_digit(text[i])) ++i;
        if (i == den_begin)
            throw ParseError("expected digits after '/' in rational literal", i);
        den = BigInt(std::string(text.substr(den_begin, i - den_begin)));
        if (den == 0) throw ParseError("zero denominator in rational literal", den_begin);
    }
    if (i != text.size()) throw ParseError("trailing characters in rational literal", i);
    if (neg) num = -num;
    return Rational(std::move(num), std::move(den));
}

inline const Rational& min(const Rational& a, const Rational& b) {
    return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
    return a < b ? b : a;
}

} // namespace nok
