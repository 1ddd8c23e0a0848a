#include "nok/slice_model.hpp"

namespace nok {

ParamPolynomial simplex_cap_area() {
    return ParamPolynomial::t() * ParamPolynomial::t() / Rational(2);
}

ParamPolynomial curve_hull_area(const CurveHull& c) {
    ParamPolynomial t = ParamPolynomial::t();
    ParamPolynomial entry = ParamPolynomial::from_param(c.t_entry);
    return (t * t - (t - entry) * (t - entry)) / Rational(2);
}

VCurveProfile vcurve_profile(const VCurve& v, const Polynomial& t_stop) {
    if (v.q <= 1) throw DomainError("vcurve_profile needs q >= 2; use CurveHull for q = 1");
    Rational q(static_cast<long long>(v.q));
    ParamPolynomial t = ParamPolynomial::t();
    ParamPolynomial entry = ParamPolynomial::from_param(v.t_entry);

    VCurveProfile out;
    out.breakpoint = q / (q - Rational(1)) * v.t_entry;
    out.rising.t_from = v.t_entry;
    out.rising.t_to = out.breakpoint;
    out.rising.area = (t * t - q * (t - entry) * (t - entry)) / Rational(2);
    out.plateau.t_from = out.breakpoint;
    out.plateau.t_to = t_stop;
    out.plateau.area =
        ParamPolynomial::from_param(q / (Rational(2) * (q - Rational(1))) * v.t_entry * v.t_entry);
    return out;
}

SurfaceProfile surface_collapse_area(const SurfaceCollapse& sc) {
    if (sc.surfaces.empty()) throw DomainError("surface collapse with no surfaces");
    ParamPolynomial t = ParamPolynomial::t();
    ParamPolynomial width = t;
    Rational slope(1);
    for (const SurfaceTerm& surf : sc.surfaces) {
        if (surf.m < 1) throw DomainError("surface multiplicity must be >= 1");
        Rational m(static_cast<long long>(surf.m));
        // m_i(t) = m0_i + (t - t1_i), slope-1 growth after entry.
        ParamPolynomial mult =
            ParamPolynomial::from_param(surf.m0 - surf.t1) + t;
        width -= m * mult;
        slope -= m;
    }

    SurfaceProfile out;
    out.width = width;
    out.area = width * width / Rational(2);
    out.slope = slope;
    // Width is affine in t: w(t) = w0(s) + slope * t.
    Polynomial w0 = width.coeff(0);
    if (slope.sign() < 0) {
        out.collapse = -(Rational(1) / slope) * w0;
        out.has_collapse = true;
    }
    return out;
}

VolumeComparison compare_volume(const Polynomial& vol, const VolumeTarget& target,
                                const RationalInterval& I, Endpoints ep,
                                const Rational& width_tol) {
    if (target.threshold.sign() <= 0) throw DomainError("volume threshold must be positive");
    Polynomial gap = Polynomial::constant(target.threshold) - vol;
    SignVerdict verdict = sign_on_interval(gap, I, ep);
    if (!target.strict && verdict == SignVerdict::Mixed) {
        // Non-strict comparison tolerates touching zeros of the gap.
        if (is_nonnegative_on(gap, I)) verdict = SignVerdict::Positive;
    }
    Enclosure sup = poly_sup_enclosure(vol, I, width_tol);
    return {verdict, {sup.lo, sup.hi}, target.threshold - sup.hi};
}

} // namespace nok
