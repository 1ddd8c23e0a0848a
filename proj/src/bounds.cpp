#include "nok/bounds.hpp"

namespace nok {

Polynomial slope_propagate(const LinearBound& b, const Polynomial& t,
                           const RationalInterval& params) {
    if (!is_nonnegative_on(t - b.start, params))
        throw DomainError("slope propagation before the entry time");
    return b.base + (t - b.start);
}

SignVerdict mult_cap_check(const LinearBound& b, const RationalInterval& params) {
    // t - (base + (t - start)) = start - base, independent of t.
    return sign_on_interval(b.start - b.base, params);
}

Polynomial sum_locus_time(const Polynomial& threshold, const LinearBound& b,
                          const RationalInterval& params) {
    Polynomial gap = threshold - b.base;
    if (is_nonnegative_on(gap, params)) return b.start + gap;
    if (is_nonpositive_on(gap, params)) return b.start; // already above threshold at entry
    throw DomainError("threshold crosses the entry value inside the parameter range");
}

Polynomial adjunction_eps_cap(const Polynomial& t, const Rational& degree_floor) {
    if (degree_floor < Rational(1)) throw DomainError("degree floor must be >= 1");
    return (Rational(1) - degree_floor) * t + Polynomial::constant(Rational(3) * degree_floor);
}

bool adjunction_success_gate(const Rational& t, const Rational& c, const Rational& eps,
                             int dim) {
    if (c.sign() <= 0 || c >= Rational(1)) throw DomainError("coefficient c must be in (0, 1)");
    return t * c + eps * (Rational(1) - c) > Rational(dim);
}

bool curve_cut_gate(const Rational& one_minus_c, const Rational& deg_BC) {
    if (one_minus_c.sign() <= 0 || deg_BC.sign() <= 0)
        throw DomainError("curve cut gate needs positive inputs");
    return one_minus_c * deg_BC > Rational(1);
}

int debarre_min_mult(const Rational& B_cubed, const Rational& eps_cap) {
    if (B_cubed.sign() <= 0 || eps_cap.sign() <= 0)
        throw DomainError("debarre gate needs positive inputs");
    Rational floor = Rational(27) * B_cubed / Rational(6);
    for (int q = 1;; ++q) {
        Rational lhs = (Rational(q) * eps_cap).pow(3);
        if (lhs >= floor) return q;
    }
}

Rational hodge_surface_cap(const Rational& deg_BC, const Rational& C_sq_floor) {
    if (C_sq_floor.sign() <= 0) throw DomainError("self-intersection floor must be positive");
    return deg_BC * deg_BC / C_sq_floor;
}

Rational seshadri_width_cap(int q, const Rational& eps) {
    if (q <= 1) throw DomainError("width cap needs q >= 2");
    Rational qq(static_cast<long long>(q));
    return qq * eps / (qq - Rational(1));
}

Rational remark_ts_cap(int q, const Rational& eps) {
    if (q <= 1) throw DomainError("entry-time cap needs q >= 2");
    Rational qq(static_cast<long long>(q));
    return qq * qq * eps / (qq * qq - qq + Rational(2));
}

bool mu_floor_certified(const Rational& B_cubed, const Rational& m) {
    if (B_cubed.sign() <= 0) throw DomainError("volume must be positive");
    return m.pow(3) < B_cubed;
}

} // namespace nok
