#include "nok/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "nok/errors.hpp"

namespace nok {

Polynomial Polynomial::monomial(Rational c, std::size_t degree) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw DomainError("constant_value of a non-constant polynomial");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(p.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator/(const Polynomial& p, const Rational& c) {
    if (c.is_zero()) throw DivisionByZeroError("polynomial divided by zero scalar");
    return Rational(1) / c * p;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->to_double();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = Rational(static_cast<long long>(i)) * coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::antiderivative() const {
    if (is_zero()) return Polynomial();
    std::vector<Rational> v(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i + 1] = coeffs_[i] / Rational(static_cast<long long>(i + 1));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + Polynomial::constant(*it);
    return acc;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial acc = Polynomial::constant(1);
    Polynomial base = *this;
    while (k != 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Polynomial rem = *this;
    if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1);
    const Rational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        Rational factor = rem.leading() / lead;
        q[shift] = factor;
        rem -= Polynomial::monomial(factor, shift) * divisor;
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

std::string Polynomial::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out << '-';
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1));
        if (!unit || i == 0) out << a.str();
        if (i > 0) {
            if (!unit) out << '*';
            out << var;
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

namespace {

// Integer polynomial helpers for the primitive pseudo-remainder sequence.
using ZPoly = std::vector<BigInt>; // dense, trimmed, coeff[k] * x^k

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content(const ZPoly& p) {
    BigInt g = 0;
    for (const BigInt& c : p) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    return g;
}

void make_primitive(ZPoly& p) {
    BigInt g = content(p);
    if (g > 1)
        for (BigInt& c : p) c /= g;
}

// Clears denominators and divides by the content; preserves sign pattern.
ZPoly to_primitive_int(const Polynomial& p) {
    ZPoly out;
    out.reserve(p.coeffs().size());
    BigInt l = 1;
    for (const Rational& c : p.coeffs()) l = l / boost::multiprecision::gcd(l, c.den()) * c.den();
    for (const Rational& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
    trim(out);
    make_primitive(out);
    return out;
}

Polynomial from_int(const ZPoly& p) {
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const BigInt& c : p) v.emplace_back(c);
    return Polynomial(std::move(v));
}

// prem(A, B): remainder of lc(B)^(degA-degB+1) * A under B, over the integers.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const BigInt& lead = b.back();
    while (a.size() >= b.size()) {
        BigInt factor = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] *= lead;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    trim(a);
    trim(b);
    if (a.empty()) {
        make_primitive(b);
        return b;
    }
    if (b.empty()) {
        make_primitive(a);
        return a;
    }
    if (a.size() < b.size()) std::swap(a, b);
    make_primitive(a);
    make_primitive(b);
    while (!b.empty()) {
        ZPoly r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    ZPoly g = zgcd(to_primitive_int(a), to_primitive_int(b));
    Polynomial out = from_int(g);
    if (out.is_zero()) return out;
    return out / out.leading(); // monic
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero() || f.degree() == 0) return f;
    Polynomial g = poly_gcd(f, f.derivative());
    if (g.degree() <= 0) return f;
    return f.divide_exact(g);
}

} // namespace nok
