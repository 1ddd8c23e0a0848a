#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nok/polynomial.hpp"

namespace nok {

/// Polynomial in the slice variable t whose coefficients are polynomials
/// in one free parameter (eps or t1). coeff(k) multiplies t^k.
///
/// Substituting a rational parameter value yields a Polynomial in t, and
/// substitution commutes with addition and multiplication.
class ParamPolynomial {
public:
    ParamPolynomial() = default;
    explicit ParamPolynomial(std::vector<Polynomial> t_coeffs)
        : coeffs_(std::move(t_coeffs)) {
        trim();
    }

    static ParamPolynomial zero() { return ParamPolynomial(); }
    static ParamPolynomial constant(Rational c) {
        return from_param(Polynomial::constant(std::move(c)));
    }
    /// Embeds a polynomial in the parameter (no t dependence).
    static ParamPolynomial from_param(Polynomial p) {
        if (p.is_zero()) return ParamPolynomial();
        return ParamPolynomial({std::move(p)});
    }
    static ParamPolynomial t() {
        return ParamPolynomial({Polynomial(), Polynomial::constant(1)});
    }
    static ParamPolynomial param() {
        return from_param(Polynomial::variable());
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree in t; -1 for zero.
    int degree_t() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Polynomial& coeff(std::size_t k) const {
        static const Polynomial zero;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }

    friend ParamPolynomial operator+(const ParamPolynomial& a, const ParamPolynomial& b);
    friend ParamPolynomial operator-(const ParamPolynomial& a, const ParamPolynomial& b);
    friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
    ParamPolynomial operator-() const;
    friend ParamPolynomial operator*(const Rational& c, const ParamPolynomial& p);
    friend ParamPolynomial operator/(const ParamPolynomial& p, const Rational& c);

    ParamPolynomial& operator+=(const ParamPolynomial& o) { return *this = *this + o; }
    ParamPolynomial& operator-=(const ParamPolynomial& o) { return *this = *this - o; }
    ParamPolynomial& operator*=(const ParamPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const ParamPolynomial& a, const ParamPolynomial& b) {
        return !(a == b);
    }

    /// Substitutes t := t_sub(s), producing a polynomial in the parameter.
    Polynomial substitute_t(const Polynomial& t_sub) const;
    /// Fixes the parameter, producing a polynomial in t.
    Polynomial at_param(const Rational& s) const;
    Rational eval(const Rational& s, const Rational& t) const;

    ParamPolynomial derivative_t() const;
    ParamPolynomial antiderivative_t() const;

    ParamPolynomial pow(unsigned k) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Polynomial> coeffs_;
};

/// Signed definite integral of f dt from lower(s) to upper(s): returns
/// F(upper(s)) - F(lower(s)) with F the antiderivative in t, exactly.
Polynomial param_definite_integral(const ParamPolynomial& f, const Polynomial& lower,
                                   const Polynomial& upper);

} // namespace nok
