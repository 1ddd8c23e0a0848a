#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "nok/piecewise.hpp"

namespace nok {

/// Universal outer bound t^2/2: slice of the inverted simplex.
struct SimplexCap {};

/// A curve entering the base locus at time t_entry(s), with multiplicity
/// bound m(t) = t - t_entry afterwards.
struct CurveHull {
    Polynomial t_entry;
};

/// A curve through the origin with mult_0 = q >= 2 (q = 1 is expressed
/// as CurveHull, whose bound is the right degenerate form).
struct VCurve {
    Polynomial t_entry;
    int q = 2;
};

/// One surface through the origin: mult_0 = m, entering the base locus at
/// t1(s) with multiplicity m0(s) there and slope-1 growth afterwards.
struct SurfaceTerm {
    int m = 1;
    Polynomial t1;
    Polynomial m0;
};

/// A collection of surfaces whose combined triangle width
/// w(t) = t - sum m_i * (m0_i + (t - t1_i)) shrinks to zero.
struct SurfaceCollapse {
    std::vector<SurfaceTerm> surfaces;
};

using SliceConstraint = std::variant<SimplexCap, CurveHull, VCurve, SurfaceCollapse>;

/// t^2/2, the area of {u, v >= 0, u + v <= t}.
ParamPolynomial simplex_cap_area();

/// (t^2 - (t - t_entry)^2) / 2, valid for t >= t_entry.
ParamPolynomial curve_hull_area(const CurveHull& c);

struct VCurveProfile {
    Segment rising;          // [t_entry, q*t_entry/(q-1)], area (t^2 - q(t-t_entry)^2)/2
    Segment plateau;         // [q*t_entry/(q-1), t_stop], constant q*t_entry^2/(2(q-1))
    Polynomial breakpoint;   // q*t_entry/(q-1)
};

/// The two pieces of the curve profile; the plateau is unbounded on the
/// right, so the caller supplies the t_stop where to cut its segment.
/// Throws DomainError for q <= 1.
VCurveProfile vcurve_profile(const VCurve& v, const Polynomial& t_stop);

struct SurfaceProfile {
    ParamPolynomial area;    // w(t)^2 / 2
    ParamPolynomial width;   // w(t), affine in t with slope 1 - sum m_i
    Rational slope;          // 1 - sum m_i
    Polynomial collapse;     // unique root of w; present iff the slope is negative
    bool has_collapse = false;
};

/// Combined surface-constraint triangle; the collapse time is present iff
/// the width slope is negative (sum m_i >= 2).
SurfaceProfile surface_collapse_area(const SurfaceCollapse& sc);

struct VolumeTarget {
    Rational threshold;
    bool strict = true;
};

struct EnclosureRat {
    Rational lo;
    Rational hi;
};

struct VolumeComparison {
    SignVerdict verdict;     // sign of threshold - volume over the interval
    EnclosureRat sup;        // enclosure of sup of the volume over the closure
    Rational margin_lo;      // threshold - sup.hi, a certified lower bound
};

/// Verdict of threshold - vol on the interval (with the endpoint policy),
/// plus a sup enclosure of the volume and the resulting exact margin
/// lower bound.
VolumeComparison compare_volume(const Polynomial& vol, const VolumeTarget& target,
                                const RationalInterval& I, Endpoints ep,
                                const Rational& width_tol);

} // namespace nok
