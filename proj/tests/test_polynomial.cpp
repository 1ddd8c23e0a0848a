#include "doctest.h"

#include "nok/polynomial.hpp"
#include "nok/rng.hpp"

using nok::Polynomial;
using nok::Rational;

namespace {

Polynomial random_poly(nok::Rng& rng, int max_deg) {
    std::vector<Rational> c(static_cast<std::size_t>(rng.below(max_deg + 1)) + 1);
    for (auto& x : c)
        x = Rational(static_cast<long long>(rng.below(21)) - 10,
                     static_cast<long long>(rng.below(6)) + 1);
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("evaluation") {
    CHECK(Polynomial().eval(Rational(7, 3)) == Rational(0));
    // (45/32) s^3 at 3/2
    Polynomial f = Polynomial::monomial(Rational(45, 32), 3);
    CHECK(f.eval(Rational(3, 2)) == Rational(1215, 256));
    // 4 s^2 - (32/27) s^3 at 2
    Polynomial g({Rational(0), Rational(0), Rational(4), Rational(-32, 27)});
    CHECK(g.eval(Rational(2)) == Rational(176, 27));
}

TEST_CASE("calculus") {
    // d/dt (t^2/2) = t, antiderivative of t^2/2 is t^3/6
    Polynomial half_sq = Polynomial::monomial(Rational(1, 2), 2);
    CHECK(half_sq.derivative() == Polynomial::variable());
    CHECK(half_sq.antiderivative() == Polynomial::monomial(Rational(1, 6), 3));

    // d/ds (4 s^2 - 32/27 s^3) = 8 s - 32/9 s^2, positive root at 9/4
    Polynomial g({Rational(0), Rational(0), Rational(4), Rational(-32, 27)});
    Polynomial dg = g.derivative();
    CHECK(dg == Polynomial({Rational(0), Rational(8), Rational(-32, 9)}));
    CHECK(dg.eval(Rational(9, 4)) == Rational(0));
}

TEST_CASE("derivative of antiderivative is the identity") {
    nok::Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        Polynomial f = random_poly(rng, 6);
        CHECK(f.antiderivative().derivative() == f);
    }
}

TEST_CASE("division") {
    Polynomial f({Rational(-2), Rational(1)});  // x - 2
    Polynomial g({Rational(1), Rational(1)});   // x + 1
    Polynomial prod = f * g;
    CHECK(prod.divide_exact(f) == g);
    auto [q, r] = (prod + Polynomial::constant(5)).divmod(f);
    CHECK(q == g);
    CHECK(r == Polynomial::constant(5));
    CHECK_THROWS_AS(prod.divmod(Polynomial()), nok::DivisionByZeroError);
    CHECK_THROWS_AS((prod + Polynomial::constant(1)).divide_exact(f), nok::DomainError);
}

TEST_CASE("gcd and squarefree part") {
    Polynomial x = Polynomial::variable();
    Polynomial one = Polynomial::constant(1);
    Polynomial a = (x - one) * (x - one) * (x + one);
    Polynomial sf = nok::squarefree_part(a);
    // same roots, all simple
    CHECK(sf.degree() == 2);
    CHECK(sf.eval(Rational(1)).is_zero());
    CHECK(sf.eval(Rational(-1)).is_zero());
    CHECK(nok::poly_gcd(a, a.derivative()).degree() == 1);

    nok::Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = random_poly(rng, 4);
        if (f.is_zero()) continue;
        Polynomial g = nok::poly_gcd(f, f);
        CHECK(g * Polynomial::constant(f.leading()) == f); // gcd(f, f) is monic f
    }
}

TEST_CASE("composition") {
    Polynomial x = Polynomial::variable();
    Polynomial inner({Rational(6), Rational(-1)}); // 6 - s
    Polynomial sq = x * x;
    CHECK(sq.compose(inner).eval(Rational(2)) == Rational(16));
    CHECK(sq.compose(inner) == inner * inner);
}

TEST_CASE("printing") {
    Polynomial g({Rational(0), Rational(0), Rational(4), Rational(-32, 27)});
    CHECK(g.str("s") == "-32/27*s^3 + 4*s^2");
    CHECK(Polynomial().str() == "0");
}
