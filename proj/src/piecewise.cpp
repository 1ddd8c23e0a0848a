#include "nok/piecewise.hpp"

#include <utility>

namespace nok {

const Polynomial& PiecewiseProfile::mu_cap() const {
    if (segments.empty()) throw DomainError("profile with no segments");
    return segments.back().t_to;
}

namespace {

std::string print_s(const Polynomial& p) { return p.str("s"); }

// g(s, edge(s)) as a univariate polynomial in the parameter.
Polynomial on_edge(const ParamPolynomial& g, const Polynomial& edge) {
    return g.substitute_t(edge);
}

} // namespace

RegionSign region_nonnegative(const ParamPolynomial& g, const Polynomial& t_from,
                              const Polynomial& t_to, const RationalInterval& params) {
    if (g.is_zero()) return RegionSign::IdenticallyZero;

    // Both t-edges must be nonnegative regardless of the inner shape.
    if (!is_nonnegative_on(on_edge(g, t_from), params)) return RegionSign::NegativeSomewhere;
    if (!is_nonnegative_on(on_edge(g, t_to), params)) return RegionSign::NegativeSomewhere;

    int dt = g.degree_t();
    if (dt <= 1) return RegionSign::Nonnegative; // affine in t: extremes at edges

    if (dt == 2) {
        const Polynomial& A = g.coeff(2);
        const Polynomial& B = g.coeff(1);
        const Polynomial& C = g.coeff(0);
        bool a_nonneg = is_nonnegative_on(A, params);
        // Positive semidefinite in t for every parameter value.
        if (a_nonneg) {
            Polynomial disc = Rational(4) * A * C - B * B;
            if (is_nonnegative_on(disc, params)) return RegionSign::Nonnegative;
        }
        // Concave in t: minimum on the edges, already checked.
        if (is_nonpositive_on(A, params)) return RegionSign::Nonnegative;
        if (a_nonneg) {
            // Vertex t* = -B / (2A) uniformly outside [t_from, t_to]:
            // right of the range iff -B - 2A*t_to >= 0, left iff
            // 2A*t_from + B >= 0 (both scaled by the nonnegative 2A).
            Polynomial two_a = Rational(2) * A;
            if (is_nonnegative_on(-B - two_a * t_to, params)) return RegionSign::Nonnegative;
            if (is_nonnegative_on(two_a * t_from + B, params)) return RegionSign::Nonnegative;
        }
        // Left: the vertex enters the t-range on part of the parameter
        // interval with a negative value there. Whether the two coincide
        // is not decided here; fail safe.
        return RegionSign::Unknown;
    }

    // Higher degree in t: decide by uniform monotonicity when possible.
    ParamPolynomial dgdt = g.derivative_t();
    RegionSign up = region_nonnegative(dgdt, t_from, t_to, params);
    if (up == RegionSign::Nonnegative || up == RegionSign::IdenticallyZero)
        return RegionSign::Nonnegative; // minimum at t_from edge
    RegionSign down = region_nonnegative(-dgdt, t_from, t_to, params);
    if (down == RegionSign::Nonnegative || down == RegionSign::IdenticallyZero)
        return RegionSign::Nonnegative; // minimum at t_to edge
    return RegionSign::Unknown;
}

SignVerdict dominance_on_region(const ParamPolynomial& bound, const ParamPolynomial& area,
                                const Polynomial& t_from, const Polynomial& t_to,
                                const RationalInterval& params) {
    ParamPolynomial diff = bound - area;
    switch (region_nonnegative(diff, t_from, t_to, params)) {
        case RegionSign::IdenticallyZero: return SignVerdict::IdenticallyZero;
        case RegionSign::Nonnegative: return SignVerdict::Positive;
        case RegionSign::NegativeSomewhere: return SignVerdict::Negative;
        case RegionSign::Unknown: return SignVerdict::Mixed;
    }
    return SignVerdict::Mixed;
}

ValidationResult profile_validate(const PiecewiseProfile& p) {
    ValidationResult res;
    if (p.segments.empty()) {
        res.fail("profile has no segments", "");
        return res;
    }
    if (!p.segments.front().t_from.is_zero())
        res.fail("first segment must start at t = 0", print_s(p.segments.front().t_from));

    for (std::size_t i = 0; i < p.segments.size(); ++i) {
        const Segment& seg = p.segments[i];
        Polynomial len = seg.t_to - seg.t_from;
        if (!is_nonnegative_on(len, p.param_interval))
            res.fail("segment " + std::to_string(i) + " breakpoints cross inside the parameter range",
                     print_s(len));
        if (i + 1 < p.segments.size()) {
            if (p.segments[i + 1].t_from != seg.t_to)
                res.fail("segments " + std::to_string(i) + "," + std::to_string(i + 1) +
                             " are not contiguous",
                         print_s(p.segments[i + 1].t_from - seg.t_to));
        }
    }

    for (std::size_t i = 0; i < p.segments.size(); ++i) {
        const Segment& seg = p.segments[i];
        RegionSign sign = region_nonnegative(seg.area, seg.t_from, seg.t_to, p.param_interval);
        if (sign == RegionSign::NegativeSomewhere || sign == RegionSign::Unknown)
            res.fail("segment " + std::to_string(i) + " area is not certifiably nonnegative",
                     print_s(on_edge(seg.area, seg.t_to)));
    }
    return res;
}

Polynomial profile_volume(const PiecewiseProfile& p) {
    Polynomial total;
    for (const Segment& seg : p.segments)
        total += param_definite_integral(seg.area, seg.t_from, seg.t_to);
    return total;
}

std::vector<Jump> profile_continuity(const PiecewiseProfile& p, const Rational& s0) {
    if (s0 < p.param_interval.lo || p.param_interval.hi < s0)
        throw DomainError("parameter value outside the profile's interval");
    std::vector<Jump> jumps;
    // Skip pieces that are empty at s0; compare across them.
    std::size_t prev = p.segments.size();
    for (std::size_t i = 0; i < p.segments.size(); ++i) {
        const Segment& seg = p.segments[i];
        if (seg.t_from.eval(s0) == seg.t_to.eval(s0)) continue;
        if (prev != p.segments.size()) {
            Rational t_b = p.segments[prev].t_to.eval(s0);
            Rational left = p.segments[prev].area.eval(s0, t_b);
            Rational right = seg.area.eval(s0, seg.t_from.eval(s0));
            if (left != right) jumps.push_back({t_b, left, right});
        }
        prev = i;
    }
    return jumps;
}

SignVerdict profile_dominance(const PiecewiseProfile& p, const ParamPolynomial& cap) {
    bool all_equal = true;
    for (const Segment& seg : p.segments) {
        SignVerdict v = dominance_on_region(cap, seg.area, seg.t_from, seg.t_to, p.param_interval);
        if (v == SignVerdict::Negative || v == SignVerdict::Mixed) return v;
        if (v != SignVerdict::IdenticallyZero) all_equal = false;
    }
    return all_equal ? SignVerdict::IdenticallyZero : SignVerdict::Positive;
}

SignVerdict profile_nonincreasing_after(const PiecewiseProfile& p, const Polynomial& t0) {
    const Polynomial& cap = p.mu_cap();
    // t0 within the profile domain.
    if (!is_nonnegative_on(t0, p.param_interval) ||
        !is_nonnegative_on(cap - t0, p.param_interval))
        throw DomainError("t0 outside the profile domain");

    for (const Segment& seg : p.segments) {
        // Lower end of the intersection [t0, cap] with the segment: needs a
        // uniform order between t0 and t_from over the parameter range.
        Polynomial lower;
        if (is_nonnegative_on(seg.t_from - t0, p.param_interval))
            lower = seg.t_from;
        else if (is_nonnegative_on(t0 - seg.t_from, p.param_interval))
            lower = t0;
        else
            return SignVerdict::Mixed; // entry crosses t0 inside the range
        if (is_nonpositive_on(seg.t_to - lower, p.param_interval)) continue; // empty piece
        RegionSign s =
            region_nonnegative(-seg.area.derivative_t(), lower, seg.t_to, p.param_interval);
        if (s == RegionSign::NegativeSomewhere) return SignVerdict::Negative;
        if (s == RegionSign::Unknown) return SignVerdict::Mixed;
    }
    return SignVerdict::Positive;
}

} // namespace nok
