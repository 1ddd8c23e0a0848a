#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nok/param_polynomial.hpp"
#include "nok/sign.hpp"

namespace nok {

/// One piece of a slice profile: an area bound valid for t in
/// [t_from(s), t_to(s)]. The breakpoints are polynomials in the parameter;
/// the piece may be empty at isolated parameter values.
struct Segment {
    Polynomial t_from;
    Polynomial t_to;
    ParamPolynomial area;
};

/// Ordered, contiguous segments over [0, mu_cap(s)] modelling an upper
/// bound for the slice areas of the body, valid for every parameter value
/// in param_interval. The final t_to is the profile's width cap.
struct PiecewiseProfile {
    std::vector<Segment> segments;
    RationalInterval param_interval;

    const Polynomial& mu_cap() const;
};

struct Violation {
    std::string what;    // which invariant failed
    std::string witness; // the offending polynomial, printed
};

struct ValidationResult {
    bool ok = true;
    std::vector<Violation> violations;

    void fail(std::string what, std::string witness) {
        ok = false;
        violations.push_back({std::move(what), std::move(witness)});
    }
};

/// Checks segment ordering (t_to - t_from >= 0 over the parameter range),
/// contiguity (exact polynomial equality of consecutive breakpoints,
/// first t_from identically 0) and pointwise nonnegativity of every area
/// over its region.
ValidationResult profile_validate(const PiecewiseProfile& p);

/// Fubini volume: sum of the signed t-integrals of the areas, as an exact
/// polynomial in the parameter. Callers validate first.
Polynomial profile_volume(const PiecewiseProfile& p);

struct Jump {
    Rational t;
    Rational left;
    Rational right;
};

/// Breakpoints where the left and right area values differ at the fixed
/// parameter value. Profiles are upper bounds and may legitimately jump;
/// this is a diagnostic.
std::vector<Jump> profile_continuity(const PiecewiseProfile& p, const Rational& s0);

/// Sign classification of a bivariate quantity over the region
/// { (s, t) : s in params, t_from(s) <= t <= t_to(s) }.
enum class RegionSign {
    Nonnegative,       // >= 0 everywhere on the region
    IdenticallyZero,   // == 0
    NegativeSomewhere, // a witness edge or vertex value is negative
    Unknown            // no reduction applied; callers must fail safe
};

/// Decides g >= 0 on the region by exact univariate checks: both t-edges,
/// a positive-semidefiniteness test in t, concavity in t, and uniform
/// location of the t-critical point outside the range. Degrees in t
/// beyond 2 are handled by recursive monotonicity in t when decidable.
RegionSign region_nonnegative(const ParamPolynomial& g, const Polynomial& t_from,
                              const Polynomial& t_to, const RationalInterval& params);

/// Positive: bound - area >= 0 on the region (dominated, touching zeros
/// allowed). IdenticallyZero: exact equality. Negative: violated
/// somewhere. Mixed: undecidable by the implemented reductions; treat as
/// failure.
SignVerdict dominance_on_region(const ParamPolynomial& bound, const ParamPolynomial& area,
                                const Polynomial& t_from, const Polynomial& t_to,
                                const RationalInterval& params);

/// Every segment checked against the cap on its own range.
SignVerdict profile_dominance(const PiecewiseProfile& p, const ParamPolynomial& cap);

/// Positive iff the t-derivative of every piece, intersected with
/// [t0, mu-cap], is <= 0 uniformly over the parameter interval.
SignVerdict profile_nonincreasing_after(const PiecewiseProfile& p, const Polynomial& t0);

} // namespace nok
