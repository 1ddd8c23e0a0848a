#include "doctest.h"

#include "nok/expr.hpp"
#include "nok/rng.hpp"

using namespace nok;

TEST_CASE("grammar basics") {
    CHECK(parse_expr("t^2/2", "eps") ==
          ParamPolynomial::t() * ParamPolynomial::t() / Rational(2));
    CHECK(parse_expr("58/6", "eps") == ParamPolynomial::constant(Rational(29, 3)));
    CHECK(parse_expr("(t - eps)^2", "eps") ==
          (ParamPolynomial::t() - ParamPolynomial::param()) *
              (ParamPolynomial::t() - ParamPolynomial::param()));
    CHECK(parse_expr("-t + t", "eps").is_zero());
    CHECK(parse_expr("2*eps^2/3", "eps") == parse_expr("2/3*eps^2", "eps"));
}

TEST_CASE("case areas from the documents") {
    ParamPolynomial t = ParamPolynomial::t();
    ParamPolynomial e = ParamPolynomial::param();
    CHECK(parse_expr("(t^2 - 5*(t - eps)^2)/2", "eps") ==
          (t * t - Rational(5) * (t - e) * (t - e)) / Rational(2));
    CHECK(parse_expr("((24 + 8*eps)/3 - 3*t)^2/2", "eps") ==
          ((ParamPolynomial::constant(24) + Rational(8) * e) / Rational(3) - Rational(3) * t)
                  .pow(2) /
              Rational(2));
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse_expr("t^-2", "eps"), ParseError);
    CHECK_THROWS_AS(parse_expr("x + 1", "eps"), ParseError);
    CHECK_THROWS_AS(parse_expr("t/0", "eps"), ParseError);
    CHECK_THROWS_AS(parse_expr("(t", "eps"), ParseError);
    CHECK_THROWS_AS(parse_expr("t +", "eps"), ParseError);
    CHECK_THROWS_AS(parse_expr("t 2", "eps"), ParseError);
    try {
        parse_expr("t + omega", "eps");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("print-parse round trip is the identity") {
    Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        ParamPolynomial p;
        for (int k = 0; k <= 2; ++k) {
            std::vector<Rational> c(static_cast<std::size_t>(rng.below(3)) + 1);
            for (auto& x : c)
                x = Rational(static_cast<long long>(rng.below(19)) - 9,
                             static_cast<long long>(rng.below(5)) + 1);
            p += ParamPolynomial::t().pow(static_cast<unsigned>(k)) *
                 ParamPolynomial::from_param(Polynomial(std::move(c)));
        }
        std::string once = expr_to_string(p, "eps");
        ParamPolynomial q = parse_expr(once, "eps");
        CHECK(q == p);
        CHECK(expr_to_string(q, "eps") == once);
    }
}

TEST_CASE("printing of shipped areas reparses") {
    for (const char* text : {"t^2/2", "(t^2 - 5*(t - eps)^2)/2", "5/8*eps^2",
                             "((24 + 8*eps)/3 - 3*t)^2/2", "(8 - 4*eps/3 - t)^2/2"}) {
        ParamPolynomial p = parse_expr(text, "eps");
        CHECK(parse_expr(expr_to_string(p, "eps"), "eps") == p);
    }
}
