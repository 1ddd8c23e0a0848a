#pragma once

#include "nok/sign.hpp"

namespace nok {

/// m(t) >= base + slope * (t - start) for t >= start. Slopes other than 1
/// are accepted for forward compatibility, but every built-in certificate
/// uses slope 1: propagation never assumes more.
struct LinearBound {
    Polynomial start; // entry time
    Polynomial base;  // value at entry
    Rational slope{1};

    LinearBound(Polynomial s, Polynomial b, Rational sl = Rational(1))
        : start(std::move(s)), base(std::move(b)), slope(std::move(sl)) {
        if (slope < Rational(1)) throw DomainError("multiplicity slope must be >= 1");
    }
};

/// Intersection-number floors normalized to B = L/(p+2): the volume floor
/// on B^3, a strict floor on B.C over elliptic curves and on B^2.S over
/// abelian surfaces.
struct GeometricGates {
    Rational B_cubed;
    Rational curve_degree_floor;
    Rational surface_degree_floor;

    GeometricGates(Rational b3, Rational cf, Rational sf)
        : B_cubed(std::move(b3)), curve_degree_floor(std::move(cf)),
          surface_degree_floor(std::move(sf)) {
        if (B_cubed.sign() <= 0 || curve_degree_floor.sign() <= 0 ||
            surface_degree_floor.sign() <= 0)
            throw DomainError("geometric gates must be positive");
    }
};

/// Slope-1 floor base + (t - start); rejects t < start anywhere on the
/// parameter range. Higher declared slopes are allowed but never assumed.
Polynomial slope_propagate(const LinearBound& b, const Polynomial& t,
                           const RationalInterval& params);

/// Positive iff t - (base + (t - start)) >= 0 on the range, i.e. the
/// parameter-free condition base <= start.
SignVerdict mult_cap_check(const LinearBound& b, const RationalInterval& params);

/// Smallest t with base + (t - start) = threshold, capped below by start.
Polynomial sum_locus_time(const Polynomial& threshold, const LinearBound& b,
                          const RationalInterval& params);

/// Strict upper bound for the Seshadri constant derived from the
/// adjunction chain at time t with curve-degree floor d:
/// t*(1 - d) + 3*d. d = 1 recovers the trivial non-nef bound 3.
Polynomial adjunction_eps_cap(const Polynomial& t, const Rational& degree_floor);

/// True iff t*c + eps*(1 - c) > dim (strict, boundary fails).
bool adjunction_success_gate(const Rational& t, const Rational& c, const Rational& eps,
                             int dim = 3);

/// True iff (1 - c) * deg_BC > 1 (strict, boundary fails).
bool curve_cut_gate(const Rational& one_minus_c, const Rational& deg_BC);

/// Smallest integer q with (q * eps_cap)^3 >= 27 * B_cubed / 6, compared
/// by exact cubing; the least origin multiplicity consistent with a
/// non-degenerate curve computing a Seshadri constant below eps_cap.
int debarre_min_mult(const Rational& B_cubed, const Rational& eps_cap);

/// deg_BC^2 / C_sq_floor, an upper bound for B^2.S by the index theorem.
Rational hodge_surface_cap(const Rational& deg_BC, const Rational& C_sq_floor);

/// q * eps / (q - 1), the width cap forced by a Seshadri-exceptional
/// curve of origin multiplicity q >= 2.
Rational seshadri_width_cap(int q, const Rational& eps);

/// q^2 * eps / (q^2 - q + 2), the companion entry-time cap for the sum
/// surface when it is abelian.
Rational remark_ts_cap(int q, const Rational& eps);

/// Certifies mu > m from the volume identity: true iff m^3 < B_cubed.
bool mu_floor_certified(const Rational& B_cubed, const Rational& m);

} // namespace nok
