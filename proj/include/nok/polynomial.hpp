#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nok/rational.hpp"

namespace nok {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficients()[k] multiplying x^k. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(Rational c) {
        return c.is_zero() ? Polynomial() : Polynomial({std::move(c)});
    }
    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }
    static Polynomial monomial(Rational c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t k) const {
        static const Rational zero;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const Rational& leading() const;

    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }
    /// Division by a nonzero rational scalar.
    friend Polynomial operator/(const Polynomial& p, const Rational& c);

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    Polynomial derivative() const;
    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;

    Polynomial compose(const Polynomial& inner) const;
    Polynomial pow(unsigned k) const;

    /// Quotient and remainder of exact division over the rationals.
    /// Divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    /// Exact division; throws DomainError if the remainder is nonzero.
    Polynomial divide_exact(const Polynomial& divisor) const;

    std::string str(std::string_view var = "x") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// f / gcd(f, f'): same distinct real roots, all simple.
Polynomial squarefree_part(const Polynomial& f);

/// Monic gcd over the rationals (1 for coprime inputs), computed with a
/// primitive pseudo-remainder sequence over the integers.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

} // namespace nok
