#include "doctest.h"

#include "nok/expr.hpp"
#include "nok/piecewise.hpp"
#include "nok/rng.hpp"
#include "nok/slice_model.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace nok;

namespace {

Polynomial s() { return Polynomial::variable(); }

// The q = 5 profile of the first main case, breakpoints in the parameter.
PiecewiseProfile case31_profile() {
    PiecewiseProfile p{{}, RationalInterval(Rational(0), Rational(3, 2))};
    p.segments.push_back({Polynomial(), s(), parse_expr("t^2/2", "eps")});
    p.segments.push_back(
        {s(), Rational(5, 4) * s(), parse_expr("(t^2 - 5*(t - eps)^2)/2", "eps")});
    p.segments.push_back({Rational(5, 4) * s(), Rational(3) * s(), parse_expr("5/8*eps^2", "eps")});
    return p;
}

PiecewiseProfile case33_profile() {
    PiecewiseProfile p{{}, RationalInterval(Rational(2), Rational(3))};
    p.segments.push_back({Polynomial(), s(), parse_expr("t^2/2", "eps")});
    p.segments.push_back(
        {s(), Polynomial({Rational(6), Rational(-1)}), parse_expr("(t^2 - (t - eps)^2)/2", "eps")});
    p.segments.push_back({Polynomial({Rational(6), Rational(-1)}),
                          Polynomial({Rational(8), Rational(-4, 3)}),
                          parse_expr("(8 - 4*eps/3 - t)^2/2", "eps")});
    return p;
}

} // namespace

TEST_CASE("validation of the shipped shapes") {
    CHECK(profile_validate(case31_profile()).ok);
    CHECK(profile_validate(case33_profile()).ok);

    // Case 3.2 ordering 4*eps/3 <= 6 - eps needs eps <= 18/7; valid since 2 < 18/7.
    Polynomial six_minus(Polynomial({Rational(6), Rational(-1)}));
    CHECK(is_nonnegative_on(six_minus - Rational(4, 3) * s(),
                            RationalInterval(Rational(3, 2), Rational(2))));
    // Case 3.3 ordering 6 - eps <= 8 - 4*eps/3 needs eps <= 6.
    CHECK(is_nonnegative_on(Polynomial({Rational(2), Rational(-1, 3)}),
                            RationalInterval(Rational(2), Rational(3))));
}

TEST_CASE("contiguity violations are reported") {
    PiecewiseProfile p{{}, RationalInterval(Rational(0), Rational(1))};
    p.segments.push_back({Polynomial(), s(), parse_expr("t^2/2", "eps")});
    p.segments.push_back({Rational(1, 2) * s(), s(), parse_expr("t^2/2", "eps")});
    ValidationResult res = profile_validate(p);
    CHECK(!res.ok);
    CHECK(res.violations.size() >= 1);

    // crossing breakpoints: t_to - t_from changes sign inside the range
    PiecewiseProfile q{{}, RationalInterval(Rational(0), Rational(2))};
    q.segments.push_back({Polynomial(), Polynomial({Rational(1), Rational(-1)}),
                          parse_expr("t^2/2", "eps")});
    CHECK(!profile_validate(q).ok);
}

TEST_CASE("volume of the first main case") {
    CHECK(profile_volume(case31_profile()) == Polynomial::monomial(Rational(45, 32), 3));
    // single segment [0, sigma] with the cap: sigma^3/6
    PiecewiseProfile simplex{{{Polynomial(), s(), parse_expr("t^2/2", "x")}},
                             RationalInterval(Rational(0), Rational(10))};
    CHECK(profile_volume(simplex) == Polynomial::monomial(Rational(1, 6), 3));
}

TEST_CASE("volume is additive under splitting a segment") {
    PiecewiseProfile p = case31_profile();
    for (std::size_t k = 0; k < p.segments.size(); ++k) {
        PiecewiseProfile split{{}, p.param_interval};
        for (std::size_t i = 0; i < p.segments.size(); ++i) {
            if (i != k) {
                split.segments.push_back(p.segments[i]);
                continue;
            }
            const Segment& seg = p.segments[i];
            Polynomial mid = (seg.t_from + seg.t_to) / Rational(2);
            split.segments.push_back({seg.t_from, mid, seg.area});
            split.segments.push_back({mid, seg.t_to, seg.area});
        }
        CHECK(profile_volume(split) == profile_volume(p));
    }
}

TEST_CASE("volume agrees with quadrature at random parameters") {
    PiecewiseProfile p = case33_profile();
    Polynomial vol = profile_volume(p);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        Rational s0 = rng.uniform(p.param_interval.lo, p.param_interval.hi);
        double numeric = 0.0;
        for (const Segment& seg : p.segments) {
            Polynomial slice = seg.area.at_param(s0);
            numeric += oracles::simpson_grid([&](double t) { return slice.eval_double(t); },
                                             seg.t_from.eval(s0).to_double(),
                                             seg.t_to.eval(s0).to_double());
        }
        double exact = vol.eval(s0).to_double();
        CHECK(std::abs(numeric - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("continuity diagnostics") {
    // V_C with q = 5, entry 1: both pieces give 5/8 at the breakpoint.
    VCurveProfile vc = vcurve_profile({Polynomial::constant(Rational(1)), 5},
                                      Polynomial::constant(Rational(3)));
    PiecewiseProfile p{{{Polynomial(), Polynomial::constant(Rational(1)), simplex_cap_area()},
                        vc.rising, vc.plateau},
                       RationalInterval(Rational(0), Rational(1))};
    CHECK(profile_continuity(p, Rational(0)).empty());

    // Case 3.3 at eps = 2: jump at t = 4 from 6 down to 8/9.
    auto jumps = profile_continuity(case33_profile(), Rational(2));
    REQUIRE(jumps.size() == 1);
    CHECK(jumps[0].t == Rational(4));
    CHECK(jumps[0].left == Rational(6));
    CHECK(jumps[0].right == Rational(8, 9));

    // single-segment profile: no jumps
    PiecewiseProfile single{{{Polynomial(), s(), simplex_cap_area()}},
                            RationalInterval(Rational(0), Rational(1))};
    CHECK(profile_continuity(single, Rational(1, 2)).empty());
}

TEST_CASE("dominance under the simplex cap") {
    ParamPolynomial cap = simplex_cap_area();

    // curve area vs cap: difference (t - t_C)^2/2, a perfect square
    ParamPolynomial curve = parse_expr("(t^2 - (t - eps)^2)/2", "eps");
    CHECK(dominance_on_region(cap, curve, s(), Polynomial({Rational(6), Rational(-1)}),
                              RationalInterval(Rational(2), Rational(3))) ==
          SignVerdict::Positive);

    // constant piece 5/8 eps^2 vs cap on t >= 5 eps/4
    CHECK(dominance_on_region(cap, parse_expr("5/8*eps^2", "eps"), Rational(5, 4) * s(),
                              Rational(3) * s(),
                              RationalInterval(Rational(0), Rational(3, 2))) ==
          SignVerdict::Positive);

    // a surface width bound w(t)^2/2 is dominated while 0 <= w(t) <= t
    CHECK(dominance_on_region(cap, parse_expr("(8 - 4*eps/3 - t)^2/2", "eps"),
                              Polynomial({Rational(6), Rational(-1)}),
                              Polynomial({Rational(8), Rational(-4, 3)}),
                              RationalInterval(Rational(2), Rational(3))) ==
          SignVerdict::Positive);

    // equality is reported as such
    CHECK(dominance_on_region(cap, cap, Polynomial(), s(),
                              RationalInterval(Rational(0), Rational(1))) ==
          SignVerdict::IdenticallyZero);

    // violated: 2*t^2 is not under the cap
    CHECK(dominance_on_region(cap, parse_expr("2*t^2", "eps"), Polynomial::constant(Rational(1)),
                              Polynomial::constant(Rational(2)),
                              RationalInterval(Rational(0), Rational(1))) ==
          SignVerdict::Negative);

    CHECK(profile_dominance(case31_profile(), cap) == SignVerdict::Positive);
    CHECK(profile_dominance(case33_profile(), cap) == SignVerdict::Positive);
}

TEST_CASE("nonincreasing after a breakpoint") {
    VCurveProfile vc = vcurve_profile({s(), 5}, Rational(3) * s());
    PiecewiseProfile p{{{Polynomial(), s(), simplex_cap_area()}, vc.rising, vc.plateau},
                       RationalInterval(Rational(1, 2), Rational(3, 2))};
    CHECK(profile_nonincreasing_after(p, vc.breakpoint) == SignVerdict::Positive);

    // Case 3.3 surface piece alone is nonincreasing on its segment.
    PiecewiseProfile tail{{{Polynomial(), Polynomial({Rational(8), Rational(-4, 3)}),
                            parse_expr("(8 - 4*eps/3 - t)^2/2", "eps")}},
                          RationalInterval(Rational(2), Rational(3))};
    CHECK(profile_nonincreasing_after(tail, Polynomial({Rational(6), Rational(-1)})) ==
          SignVerdict::Positive);

    // t^2/2 grows after 0: fails.
    PiecewiseProfile growing{{{Polynomial(), Polynomial::constant(Rational(2)),
                               simplex_cap_area()}},
                             RationalInterval(Rational(0), Rational(1))};
    SignVerdict v = profile_nonincreasing_after(growing, Polynomial());
    CHECK((v == SignVerdict::Negative || v == SignVerdict::Mixed));
}
