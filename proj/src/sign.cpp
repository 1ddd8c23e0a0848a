#include "nok/sign.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace nok {

std::string to_string(SignVerdict v) {
    switch (v) {
        case SignVerdict::Positive: return "Positive";
        case SignVerdict::Negative: return "Negative";
        case SignVerdict::IdenticallyZero: return "IdenticallyZero";
        case SignVerdict::Mixed: return "Mixed";
    }
    return "?";
}

namespace {

using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
    BigInt g = 0;
    for (const BigInt& c : p) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    if (g > 1)
        for (BigInt& c : p) c /= g;
}

ZPoly to_primitive_int(const Polynomial& p) {
    ZPoly out;
    out.reserve(p.coeffs().size());
    BigInt l = 1;
    for (const Rational& c : p.coeffs()) l = l / boost::multiprecision::gcd(l, c.den()) * c.den();
    for (const Rational& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
    trim(out);
    make_primitive(out);
    return out;
}

ZPoly zderivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = BigInt(i) * p[i];
    return out;
}

// Sign of p at x = a/b with b > 0: sign of sum p[i] * a^i * b^(n-i),
// accumulated by a homogenized Horner scheme over the integers.
int sign_at(const ZPoly& p, const Rational& x) {
    if (p.empty()) return 0;
    const BigInt& a = x.num();
    const BigInt& b = x.den();
    BigInt acc = 0;
    BigInt bpow = 1;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * a + p[i] * bpow;
        bpow *= b;
    }
    if (acc == 0) return 0;
    return acc > 0 ? 1 : -1;
}

struct PremResult {
    ZPoly rem;      // equals scale * rem(A, B) with |scale| a power of lc(B)
    int scale_sign; // sign of that scale
};

// Pseudo-remainder over the integers, tracking the sign of the implicit
// positive-power-of-leading-coefficient scale so Sturm chains keep the
// classical sign pattern.
PremResult pseudo_rem(ZPoly a, const ZPoly& b) {
    const BigInt& lead = b.back();
    int lead_sign = lead > 0 ? 1 : -1;
    int scale_sign = 1;
    while (a.size() >= b.size()) {
        BigInt factor = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] *= lead;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
        scale_sign *= lead_sign;
        if (a.empty()) break;
    }
    return {std::move(a), scale_sign};
}

// Sturm chain with primitive pseudo-remainders: f, f', then each element
// sign-equivalent to -rem(previous two).
std::vector<ZPoly> sturm_chain(const ZPoly& f) {
    std::vector<ZPoly> chain;
    chain.push_back(f);
    ZPoly d = zderivative(f);
    trim(d);
    if (d.empty()) return chain;
    make_primitive(d);
    chain.push_back(std::move(d));
    for (;;) {
        const ZPoly& a = chain[chain.size() - 2];
        const ZPoly& b = chain.back();
        if (b.size() <= 1) break;
        PremResult pr = pseudo_rem(a, b);
        if (pr.rem.empty()) break;
        make_primitive(pr.rem);
        if (pr.scale_sign > 0)
            for (BigInt& c : pr.rem) c = -c;
        chain.push_back(std::move(pr.rem));
    }
    return chain;
}

int sign_variations(const std::vector<ZPoly>& chain, const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const ZPoly& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Removes every factor (x - r); r must be checked to be a root by the caller.
Polynomial strip_root(Polynomial f, const Rational& r) {
    Polynomial lin({-r, Rational(1)});
    while (!f.is_zero() && f.eval(r).is_zero()) f = f.divide_exact(lin);
    return f;
}

Polynomial strip_ends(Polynomial g, const Rational& a, const Rational& b) {
    if (!g.is_zero() && g.eval(a).is_zero()) g = strip_root(g, a);
    if (!g.is_zero() && g.eval(b).is_zero()) g = strip_root(g, b);
    return g;
}

// g squarefree with g(lo) != 0 and g(hi) != 0; isolating intervals for
// the roots in (lo, hi). Rational roots hit by a bisection midpoint are
// reported exactly.
void isolate_rec(const Polynomial& g, const std::vector<ZPoly>& chain, const Rational& lo,
                 const Rational& hi, std::vector<RationalInterval>& out) {
    int n = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (n <= 0) return;
    if (n == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rational mid = (lo + hi) / Rational(2);
    if (g.eval(mid).is_zero()) {
        out.emplace_back(mid, mid);
        Polynomial g2 = strip_root(g, mid);
        if (g2.degree() >= 1) {
            auto chain2 = sturm_chain(to_primitive_int(g2));
            isolate_rec(g2, chain2, lo, mid, out);
            isolate_rec(g2, chain2, mid, hi, out);
        }
        return;
    }
    isolate_rec(g, chain, lo, mid, out);
    isolate_rec(g, chain, mid, hi, out);
}

// A rational point strictly between `a` and the single root R of g in
// (a, b); g(a) != 0 and g(b) != 0.
Rational point_before_root(const Polynomial& g, Rational a, Rational b) {
    int sign_a = g.eval(a).sign();
    assert(sign_a != 0);
    for (;;) {
        Rational m = (a + b) / Rational(2);
        int sm = g.eval(m).sign();
        if (sm == 0) return (a + m) / Rational(2); // R == m exactly
        if (sm == sign_a) return m;                // m still left of R
        b = m;                                     // tighten from the right
    }
}

// A rational point strictly between the single root R of g in (a, b)
// and `b`; g(a) != 0 and g(b) != 0.
Rational point_after_root(const Polynomial& g, Rational a, Rational b) {
    int sign_b = g.eval(b).sign();
    assert(sign_b != 0);
    for (;;) {
        Rational m = (a + b) / Rational(2);
        int sm = g.eval(m).sign();
        if (sm == 0) return (m + b) / Rational(2); // R == m exactly
        if (sm == sign_b) return m;                // m already right of R
        a = m;                                     // tighten from the left
    }
}

} // namespace

int sturm_root_count(const Polynomial& f, const RationalInterval& I) {
    if (f.is_zero()) throw DomainError("root count of the identically zero polynomial");
    if (f.degree() == 0 || I.lo == I.hi) return 0; // (a, a] is empty
    Polynomial g = squarefree_part(f);
    int extra = 0;
    if (g.eval(I.hi).is_zero()) {
        extra = 1;
        g = strip_root(g, I.hi);
    }
    if (!g.is_zero() && g.eval(I.lo).is_zero()) g = strip_root(g, I.lo); // lo excluded
    if (g.degree() <= 0) return extra;
    auto chain = sturm_chain(to_primitive_int(g));
    return sign_variations(chain, I.lo) - sign_variations(chain, I.hi) + extra;
}

int root_count_open(const Polynomial& f, const RationalInterval& I) {
    if (I.lo == I.hi) return 0;
    int n = sturm_root_count(f, I);
    if (f.eval(I.hi).is_zero()) --n;
    return n;
}

SignVerdict sign_on_interval(const Polynomial& f, const RationalInterval& I, Endpoints ep) {
    if (f.is_zero()) return SignVerdict::IdenticallyZero;
    if (I.lo == I.hi) {
        if (!ep.include_lo || !ep.include_hi) return SignVerdict::Positive; // empty set
        int s = f.eval(I.lo).sign();
        if (s > 0) return SignVerdict::Positive;
        if (s < 0) return SignVerdict::Negative;
        return SignVerdict::Mixed;
    }
    if (root_count_open(f, I) > 0) return SignVerdict::Mixed;
    Rational at_lo = f.eval(I.lo);
    Rational at_hi = f.eval(I.hi);
    if (ep.include_lo && at_lo.is_zero()) return SignVerdict::Mixed;
    if (ep.include_hi && at_hi.is_zero()) return SignVerdict::Mixed;
    int s;
    if (!at_lo.is_zero())
        s = at_lo.sign();
    else if (!at_hi.is_zero())
        s = at_hi.sign();
    else
        s = f.eval(I.midpoint()).sign(); // interior is root-free
    return s > 0 ? SignVerdict::Positive : SignVerdict::Negative;
}

std::vector<RationalInterval> isolate_roots(const Polynomial& f, const RationalInterval& I) {
    if (f.is_zero()) throw DomainError("root isolation of the identically zero polynomial");
    std::vector<RationalInterval> out;
    if (I.lo == I.hi || f.degree() <= 0) return out;
    Polynomial g = strip_ends(squarefree_part(f), I.lo, I.hi);
    if (g.degree() <= 0) return out;
    auto chain = sturm_chain(to_primitive_int(g));
    isolate_rec(g, chain, I.lo, I.hi, out);
    std::sort(out.begin(), out.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
    return out;
}

bool is_nonnegative_on(const Polynomial& f, const RationalInterval& I) {
    if (f.is_zero()) return true;
    if (f.eval(I.lo).sign() < 0 || f.eval(I.hi).sign() < 0) return false;
    if (I.lo == I.hi) return true;

    auto marks = isolate_roots(f, I);
    Polynomial g = squarefree_part(f);

    // One sample per root-free component of [lo, hi], each must be >= 0.
    // Components run between consecutive root locations (and the interval
    // ends); a boundary point whose f-value vanishes cannot serve as a
    // sample, so a point is bisected off the adjacent isolating interval.
    Rational prev_edge = I.lo;
    bool have_prev_interval = false;
    RationalInterval prev_interval{I.lo, I.lo};
    for (std::size_t i = 0; i <= marks.size(); ++i) {
        Rational next_edge = (i < marks.size()) ? marks[i].lo : I.hi;
        Rational sample;
        bool found = false;
        if (prev_edge < next_edge) {
            sample = (prev_edge + next_edge) / Rational(2);
            found = true;
        } else if (!f.eval(prev_edge).is_zero()) {
            sample = prev_edge; // shared edge, not a root
            found = true;
        } else if (i < marks.size() && marks[i].lo < marks[i].hi) {
            // Component starts at a root located exactly at this edge and
            // runs into the next isolating interval.
            Polynomial gg = strip_ends(g, marks[i].lo, marks[i].hi);
            sample = point_before_root(gg, marks[i].lo, marks[i].hi);
            found = true;
        } else if (have_prev_interval && prev_interval.lo < prev_interval.hi) {
            // Component ends at a root located exactly at this edge and
            // reaches back into the previous isolating interval.
            Polynomial gg = strip_ends(g, prev_interval.lo, prev_interval.hi);
            sample = point_after_root(gg, prev_interval.lo, prev_interval.hi);
            found = true;
        }
        // Otherwise the component is empty (degenerate roots back to back).
        if (found && f.eval(sample).sign() < 0) return false;
        if (i < marks.size()) {
            prev_edge = marks[i].hi;
            prev_interval = marks[i];
            have_prev_interval = true;
        }
    }
    return true;
}

bool is_nonpositive_on(const Polynomial& f, const RationalInterval& I) {
    return is_nonnegative_on(-f, I);
}

namespace {

struct RatInterval {
    Rational lo;
    Rational hi;
};

RatInterval interval_mul(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

// Exact interval Horner; overestimates the range of f over [a, b].
RatInterval interval_eval(const Polynomial& f, const Rational& a, const Rational& b) {
    RatInterval x{a, b};
    RatInterval acc{Rational(0), Rational(0)};
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = interval_mul(acc, x);
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

struct CriticalBox {
    Rational a;
    Rational b;
    Polynomial iso;   // ends stripped: nonzero at a and b, one root inside
    Rational lo_cand; // max(f(a), f(b)): attained values, valid lower witnesses
    Rational hi_cand; // interval-Horner upper bound for f over [a, b]
};

CriticalBox make_box(const Polynomial& f, Polynomial iso, Rational a, Rational b) {
    Rational fa = f.eval(a), fb = f.eval(b);
    auto range = interval_eval(f, a, b);
    return {std::move(a), std::move(b), std::move(iso), max(fa, fb), range.hi};
}

} // namespace

Enclosure poly_sup_enclosure(const Polynomial& f, const RationalInterval& I,
                             const Rational& width_tol) {
    if (width_tol.sign() <= 0) throw DomainError("sup enclosure needs width_tol > 0");
    if (f.is_zero()) return {Rational(0), Rational(0)};
    Rational best = max(f.eval(I.lo), f.eval(I.hi));
    if (I.lo == I.hi || f.degree() == 0) return {best, best};

    Polynomial df = f.derivative();
    Polynomial dfs = squarefree_part(df);
    std::vector<CriticalBox> boxes;
    for (const auto& iv : isolate_roots(df, I)) {
        if (iv.lo == iv.hi) {
            best = max(best, f.eval(iv.lo)); // rational critical point, exact value
        } else {
            boxes.push_back(make_box(f, strip_ends(dfs, iv.lo, iv.hi), iv.lo, iv.hi));
        }
    }

    for (;;) {
        Rational lo = best;
        for (const auto& b : boxes) lo = max(lo, b.lo_cand);
        Rational hi = lo;
        std::size_t worst = boxes.size();
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            if (boxes[i].hi_cand > hi) {
                hi = boxes[i].hi_cand;
                worst = i;
            }
        }
        if (worst == boxes.size() || hi - lo <= width_tol) return {lo, hi};

        // Bisect the box that currently dominates the upper bound.
        CriticalBox box = boxes[worst];
        Rational m = (box.a + box.b) / Rational(2);
        int sm = box.iso.eval(m).sign();
        if (sm == 0) {
            best = max(best, f.eval(m)); // the critical point is rational after all
            boxes.erase(boxes.begin() + static_cast<std::ptrdiff_t>(worst));
            continue;
        }
        int sa = box.iso.eval(box.a).sign();
        if (sa == sm)
            boxes[worst] = make_box(f, box.iso, m, box.b);
        else
            boxes[worst] = make_box(f, box.iso, box.a, m);
    }
}

} // namespace nok
