#include "nok/param_polynomial.hpp"

#include <algorithm>

namespace nok {

ParamPolynomial operator+(const ParamPolynomial& a, const ParamPolynomial& b) {
    std::vector<Polynomial> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return ParamPolynomial(std::move(v));
}

ParamPolynomial operator-(const ParamPolynomial& a, const ParamPolynomial& b) {
    std::vector<Polynomial> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return ParamPolynomial(std::move(v));
}

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ParamPolynomial();
    std::vector<Polynomial> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ParamPolynomial(std::move(v));
}

ParamPolynomial ParamPolynomial::operator-() const {
    std::vector<Polynomial> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return ParamPolynomial(std::move(v));
}

ParamPolynomial operator*(const Rational& c, const ParamPolynomial& p) {
    if (c.is_zero()) return ParamPolynomial();
    std::vector<Polynomial> v(p.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
    return ParamPolynomial(std::move(v));
}

ParamPolynomial operator/(const ParamPolynomial& p, const Rational& c) {
    if (c.is_zero()) throw DivisionByZeroError("parametric polynomial divided by zero scalar");
    return Rational(1) / c * p;
}

Polynomial ParamPolynomial::substitute_t(const Polynomial& t_sub) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t_sub + *it;
    return acc;
}

Polynomial ParamPolynomial::at_param(const Rational& s) const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i].eval(s);
    return Polynomial(std::move(v));
}

Rational ParamPolynomial::eval(const Rational& s, const Rational& t) const {
    return at_param(s).eval(t);
}

ParamPolynomial ParamPolynomial::derivative_t() const {
    if (coeffs_.size() <= 1) return ParamPolynomial();
    std::vector<Polynomial> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = Rational(static_cast<long long>(i)) * coeffs_[i];
    return ParamPolynomial(std::move(v));
}

ParamPolynomial ParamPolynomial::antiderivative_t() const {
    if (is_zero()) return ParamPolynomial();
    std::vector<Polynomial> v(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i + 1] = coeffs_[i] / Rational(static_cast<long long>(i + 1));
    return ParamPolynomial(std::move(v));
}

ParamPolynomial ParamPolynomial::pow(unsigned k) const {
    ParamPolynomial acc = ParamPolynomial::constant(1);
    ParamPolynomial base = *this;
    while (k != 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

Polynomial param_definite_integral(const ParamPolynomial& f, const Polynomial& lower,
                                   const Polynomial& upper) {
    ParamPolynomial F = f.antiderivative_t();
    return F.substitute_t(upper) - F.substitute_t(lower);
}

} // namespace nok
