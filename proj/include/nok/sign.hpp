#pragma once

#include <string>
#include <vector>

#include "nok/polynomial.hpp"

namespace nok {

/// Exact sign classification of a polynomial over a queried interval.
/// Positive means f(x) > 0 for every x in the queried set (analogously
/// Negative); Mixed means a sign change or a zero exists in it.
enum class SignVerdict { Positive, Negative, IdenticallyZero, Mixed };

std::string to_string(SignVerdict v);

struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default; // [0, 0]
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw DomainError("interval with hi < lo");
    }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Which endpoints belong to the queried set. Strict verification uses
/// the closed interval; an endpoint explicitly marked open is excluded
/// from the root count and from sign sampling.
struct Endpoints {
    bool include_lo = true;
    bool include_hi = true;
};

/// Number of distinct real roots of f in the half-open interval (lo, hi],
/// from sign-variation counts of a primitive pseudo-remainder Sturm
/// sequence. Precondition: f is not identically zero.
int sturm_root_count(const Polynomial& f, const RationalInterval& I);

/// Distinct real roots in the open interval (lo, hi).
int root_count_open(const Polynomial& f, const RationalInterval& I);

SignVerdict sign_on_interval(const Polynomial& f, const RationalInterval& I,
                             Endpoints ep = {});

/// Decides f(x) >= 0 for every x in the closed interval, exactly.
/// Touching zeros are allowed.
bool is_nonnegative_on(const Polynomial& f, const RationalInterval& I);
bool is_nonpositive_on(const Polynomial& f, const RationalInterval& I);

/// Isolating intervals for the distinct real roots of f in the open
/// interval (lo, hi), sorted and pairwise disjoint. A rational root r is
/// reported as the degenerate interval [r, r]; every other entry is an
/// open interval with exactly one (simple squarefree) root inside and
/// nonzero values of the squarefree part at both ends.
std::vector<RationalInterval> isolate_roots(const Polynomial& f,
                                            const RationalInterval& I);

struct Enclosure {
    Rational lo;
    Rational hi;
};

/// Encloses sup of f over the closed interval within width_tol: the true
/// supremum lies in [lo, hi] and hi - lo <= width_tol. Candidates are the
/// endpoint values and the isolated roots of f', refined by bisection
/// with exact interval Horner evaluation.
Enclosure poly_sup_enclosure(const Polynomial& f, const RationalInterval& I,
                             const Rational& width_tol);

} // namespace nok
