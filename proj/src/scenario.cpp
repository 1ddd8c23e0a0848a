#include "nok/scenario.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "nok/quadrature.hpp"
#include "nok/rng.hpp"

namespace nok {

using nlohmann::json;

PiecewiseProfile ScenarioBranch::profile() const {
    PiecewiseProfile p{{}, interval};
    p.segments.reserve(segments.size());
    for (const ScenarioSegment& seg : segments)
        p.segments.push_back({seg.t_from, seg.t_to, seg.area});
    return p;
}

namespace {

Polynomial param_only(const ParamPolynomial& p, const std::string& what) {
    if (p.degree_t() > 0)
        throw ScenarioError(what + " must not involve t");
    return p.coeff(0);
}

Polynomial parse_param_expr(const std::string& text, const std::string& param,
                            const std::string& what) {
    try {
        return param_only(parse_expr(text, param), what);
    } catch (const ParseError& e) {
        throw ScenarioError(what + ": " + e.what());
    }
}

Rational parse_rat(const json& j, const std::string& what) {
    if (!j.is_string()) throw ScenarioError(what + " must be a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ScenarioError(what + ": " + e.what());
    }
}

SliceConstraint parse_constraint(const json& j, const std::string& param) {
    if (!j.is_object() || !j.contains("type"))
        throw ScenarioError("constraint must be an object with a type");
    std::string type = j.at("type").get<std::string>();
    if (type == "simplex_cap") return SimplexCap{};
    if (type == "curve_hull") {
        return CurveHull{parse_param_expr(j.at("t_c").get<std::string>(), param,
                                          "curve_hull t_c")};
    }
    if (type == "vcurve") {
        VCurve v;
        v.t_entry = parse_param_expr(j.at("t_c").get<std::string>(), param, "vcurve t_c");
        v.q = j.at("q").get<int>();
        return v;
    }
    if (type == "surface_collapse") {
        SurfaceCollapse sc;
        for (const json& js : j.at("surfaces")) {
            SurfaceTerm term;
            term.m = js.at("m").get<int>();
            term.t1 = parse_param_expr(js.at("t1").get<std::string>(), param, "surface t1");
            term.m0 = parse_param_expr(js.at("m0").get<std::string>(), param, "surface m0");
            sc.surfaces.push_back(std::move(term));
        }
        if (sc.surfaces.empty()) throw ScenarioError("surface_collapse with no surfaces");
        return sc;
    }
    throw ScenarioError("unknown constraint type '" + type + "'");
}

std::string print_s(const Polynomial& p) { return p.str("s"); }

// Range fit helper: needs f >= 0 over the closed branch interval.
bool fits(const Polynomial& f, const RationalInterval& I) { return is_nonnegative_on(f, I); }

void check_constraint(const ScenarioSegment& seg, const SliceConstraint& c,
                      const RationalInterval& branch, std::size_t seg_index,
                      ValidationResult& res) {
    std::string where = "segment " + std::to_string(seg_index);
    auto dominated = [&](const ParamPolynomial& bound, const std::string& label) {
        SignVerdict v = dominance_on_region(bound, seg.area, seg.t_from, seg.t_to, branch);
        if (v == SignVerdict::Negative)
            res.fail(where + " area exceeds the " + label + " bound",
                     print_s(bound.substitute_t(seg.t_to) - seg.area.substitute_t(seg.t_to)));
        else if (v == SignVerdict::Mixed)
            res.fail(where + " dominance under the " + label + " bound is undecided",
                     print_s(seg.t_to));
    };

    if (std::holds_alternative<SimplexCap>(c)) {
        dominated(simplex_cap_area(), "simplex cap");
        return;
    }
    if (const auto* hull = std::get_if<CurveHull>(&c)) {
        if (!fits(seg.t_from - hull->t_entry, branch)) {
            res.fail(where + " starts before the curve entry time",
                     print_s(seg.t_from - hull->t_entry));
            return;
        }
        dominated(curve_hull_area(*hull), "curve hull");
        return;
    }
    if (const auto* vc = std::get_if<VCurve>(&c)) {
        if (vc->q <= 1) {
            res.fail(where + " vcurve constraint needs q >= 2 (use curve_hull for q = 1)", "");
            return;
        }
        VCurveProfile prof = vcurve_profile(*vc, seg.t_to);
        bool in_rising =
            fits(seg.t_from - vc->t_entry, branch) && fits(prof.breakpoint - seg.t_to, branch);
        if (in_rising) {
            dominated(prof.rising.area, "curve profile (rising piece)");
            return;
        }
        bool in_plateau = fits(seg.t_from - prof.breakpoint, branch);
        if (in_plateau) {
            dominated(prof.plateau.area, "curve profile (plateau)");
            return;
        }
        res.fail(where + " does not lie within a single piece of the curve profile",
                 print_s(prof.breakpoint));
        return;
    }
    const auto& sc = std::get<SurfaceCollapse>(c);
    for (std::size_t i = 0; i < sc.surfaces.size(); ++i) {
        const SurfaceTerm& surf = sc.surfaces[i];
        if (!fits(surf.t1, branch))
            res.fail(where + " surface " + std::to_string(i) + " has a negative entry time",
                     print_s(surf.t1));
        if (!fits(surf.m0, branch))
            res.fail(where + " surface " + std::to_string(i) + " has a negative entry multiplicity",
                     print_s(surf.m0));
        if (!fits(seg.t_from - surf.t1, branch))
            res.fail(where + " starts before surface " + std::to_string(i) + " enters",
                     print_s(seg.t_from - surf.t1));
    }
    SurfaceProfile prof = surface_collapse_area(sc);
    if (prof.has_collapse) {
        if (!fits(prof.collapse - seg.t_to, branch)) {
            res.fail(where + " extends past the collapse time", print_s(prof.collapse));
            return;
        }
    } else {
        // Slope-zero width: must stay nonnegative on its own.
        if (!fits(prof.width.coeff(0), branch)) {
            res.fail(where + " has a negative constant width", print_s(prof.width.coeff(0)));
            return;
        }
    }
    dominated(prof.area, "surface triangle");
}

struct MarginFloor {
    const char* name;
    Rational floor;
};

const std::vector<MarginFloor>& margin_floors() {
    static const std::vector<MarginFloor> floors = {
        {"thm-main-case-3.1", Rational(4)},
        {"thm-main-case-3.2", Rational(3)},
        {"thm-main-case-3.3", Rational(1, 10)},
        {"cor-main-case-1", Rational(1)},
        {"cor-main-case-2", Rational(1)},
    };
    return floors;
}

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ScenarioError("scenario document must be a JSON object");

    Scenario s;
    try {
        s.name = doc.at("name").get<std::string>();
        s.param_name = doc.at("param").get<std::string>();
        if (s.param_name == "t") throw ScenarioError("parameter cannot be named t");
        const json& pi = doc.at("param_interval");
        if (!pi.is_array() || pi.size() != 2)
            throw ScenarioError("param_interval must be [lo, hi]");
        s.param_interval.lo = parse_rat(pi[0], "param_interval lo");
        s.param_interval.hi = parse_rat(pi[1], "param_interval hi");
        s.param_interval.open_lo = doc.value("open_lo", false);
        s.param_interval.open_hi = doc.value("open_hi", false);
        s.threshold = parse_rat(doc.at("threshold"), "threshold");
        s.strict = doc.value("strict", true);
        s.notes = doc.value("notes", std::string());

        for (const json& jb : doc.at("branches")) {
            const json& bi = jb.at("param_interval");
            if (!bi.is_array() || bi.size() != 2)
                throw ScenarioError("branch param_interval must be [lo, hi]");
            ScenarioBranch branch{
                RationalInterval(parse_rat(bi[0], "branch lo"), parse_rat(bi[1], "branch hi")),
                {}};
            for (const json& js : jb.at("segments")) {
                ScenarioSegment seg;
                seg.t_from = parse_param_expr(js.at("t_from").get<std::string>(), s.param_name,
                                              "t_from");
                seg.t_to =
                    parse_param_expr(js.at("t_to").get<std::string>(), s.param_name, "t_to");
                try {
                    seg.area = parse_expr(js.at("area").get<std::string>(), s.param_name);
                } catch (const ParseError& e) {
                    throw ScenarioError(std::string("area: ") + e.what());
                }
                if (js.contains("constraints"))
                    for (const json& jc : js.at("constraints"))
                        seg.constraints.push_back(parse_constraint(jc, s.param_name));
                branch.segments.push_back(std::move(seg));
            }
            s.branches.push_back(std::move(branch));
        }
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("malformed scenario document: ") + e.what());
    }
    if (s.param_interval.hi < s.param_interval.lo)
        throw ScenarioError("parameter interval must have lo <= hi");
    if (s.threshold.sign() <= 0) throw ScenarioError("threshold must be positive");
    if (s.branches.empty()) throw ScenarioError("scenario needs at least one branch");
    return s;
}

ValidationResult validate_scenario(const Scenario& s) {
    ValidationResult res;

    // Branch subintervals partition the parameter interval.
    if (s.branches.front().interval.lo != s.param_interval.lo)
        res.fail("first branch does not start at the parameter interval's lower end",
                 s.branches.front().interval.lo.str());
    for (std::size_t i = 0; i + 1 < s.branches.size(); ++i)
        if (s.branches[i].interval.hi != s.branches[i + 1].interval.lo)
            res.fail("branches " + std::to_string(i) + "," + std::to_string(i + 1) +
                         " do not partition the parameter interval",
                     s.branches[i].interval.hi.str());
    if (s.branches.back().interval.hi != s.param_interval.hi)
        res.fail("last branch does not end at the parameter interval's upper end",
                 s.branches.back().interval.hi.str());

    for (std::size_t b = 0; b < s.branches.size(); ++b) {
        const ScenarioBranch& branch = s.branches[b];
        ValidationResult pv = profile_validate(branch.profile());
        for (Violation& v : pv.violations)
            res.fail("branch " + std::to_string(b) + ": " + v.what, v.witness);

        for (std::size_t i = 0; i < branch.segments.size(); ++i) {
            const ScenarioSegment& seg = branch.segments[i];
            ValidationResult cv;
            check_constraint(seg, SimplexCap{}, branch.interval, i, cv);
            for (const SliceConstraint& c : seg.constraints)
                check_constraint(seg, c, branch.interval, i, cv);
            for (Violation& v : cv.violations)
                res.fail("branch " + std::to_string(b) + ": " + v.what, v.witness);
        }
    }
    return res;
}

Scenario load_scenario(const std::string& json_text) {
    Scenario s = parse_scenario(json_text);
    ValidationResult res = validate_scenario(s);
    if (!res.ok) {
        std::ostringstream msg;
        msg << "scenario '" << s.name << "' failed validation:";
        for (const Violation& v : res.violations) {
            msg << "\n  - " << v.what;
            if (!v.witness.empty()) msg << " [witness: " << v.witness << "]";
        }
        throw ScenarioError(msg.str());
    }
    return s;
}

VerificationResult verify(const Scenario& s, const VerifyOptions& opts) {
    VerificationResult out;
    out.name = s.name;
    out.notes = s.notes;

    ValidationResult validation = validate_scenario(s);
    if (!validation.ok) {
        for (const Violation& v : validation.violations)
            out.violations.push_back(v.witness.empty() ? v.what
                                                       : v.what + " [witness: " + v.witness + "]");
        out.holds = false;
        return out;
    }

    bool all_hold = true;
    bool first = true;
    for (const ScenarioBranch& branch : s.branches) {
        BranchResult br;
        br.interval = branch.interval;
        br.volume = profile_volume(branch.profile());
        Endpoints ep;
        ep.include_lo = !(branch.interval.lo == s.param_interval.lo && s.param_interval.open_lo);
        ep.include_hi = !(branch.interval.hi == s.param_interval.hi && s.param_interval.open_hi);
        VolumeComparison cmp = compare_volume(br.volume, {s.threshold, s.strict},
                                              branch.interval, ep, opts.width_tol);
        br.verdict = cmp.verdict;
        br.sup = cmp.sup;
        br.margin_lo = cmp.margin_lo;
        bool ok = cmp.verdict == SignVerdict::Positive ||
                  (!s.strict && cmp.verdict == SignVerdict::IdenticallyZero);
        if (!ok) {
            all_hold = false;
            out.violations.push_back("threshold comparison failed on branch [" +
                                     branch.interval.lo.str() + "," + branch.interval.hi.str() +
                                     "]: verdict " + to_string(cmp.verdict));
        }
        if (first) {
            out.sup = br.sup;
            first = false;
        } else {
            out.sup.lo = max(out.sup.lo, br.sup.lo);
            out.sup.hi = max(out.sup.hi, br.sup.hi);
        }
        out.branches.push_back(std::move(br));
    }
    out.holds = all_hold;
    out.margin_lower_bound = s.threshold - out.sup.hi;
    return out;
}

Scenario load_builtin(const std::string& name) {
    return load_scenario(builtin_scenario_json(name));
}

bool VerificationReport::pass() const {
    for (const VerificationResult& r : results)
        if (!r.holds) return false;
    for (const StructuralResult& r : structural)
        if (!r.holds) return false;
    return true;
}

double numeric_crosscheck(const Scenario& s, int n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw DomainError("cross-check needs at least one sample");
    Rng rng(seed);
    // Exact volumes per branch, computed once.
    std::vector<Polynomial> volumes;
    volumes.reserve(s.branches.size());
    for (const ScenarioBranch& b : s.branches) volumes.push_back(profile_volume(b.profile()));

    double worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        Rational s0 = rng.uniform(s.param_interval.lo, s.param_interval.hi);
        std::size_t bi = 0;
        while (bi + 1 < s.branches.size() && s.branches[bi].interval.hi < s0) ++bi;
        const ScenarioBranch& branch = s.branches[bi];

        double exact = volumes[bi].eval(s0).to_double();
        double numeric = 0.0;
        for (const ScenarioSegment& seg : branch.segments) {
            double a = seg.t_from.eval(s0).to_double();
            double b = seg.t_to.eval(s0).to_double();
            Polynomial slice = seg.area.at_param(s0);
            numeric += adaptive_simpson([&](double t) { return slice.eval_double(t); }, a, b);
        }
        double dev = std::abs(numeric - exact) / std::max(1.0, std::abs(exact));
        worst = std::max(worst, dev);
    }
    return worst;
}

std::vector<ProfileSample> sample_profile(const Scenario& s, const Rational& s0, int n) {
    if (n < 1) throw DomainError("need at least one sample step");
    if (s0 < s.param_interval.lo || s.param_interval.hi < s0)
        throw DomainError("parameter value outside the scenario interval");
    std::size_t bi = 0;
    while (bi + 1 < s.branches.size() && s.branches[bi].interval.hi < s0) ++bi;
    const ScenarioBranch& branch = s.branches[bi];

    Rational cap = branch.segments.back().t_to.eval(s0);
    if (cap.sign() <= 0)
        throw DomainError("profile is degenerate at this parameter value");
    std::vector<ProfileSample> rows;
    rows.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Rational t = cap * Rational(i) / Rational(n);
        // Right-continuous at interior breakpoints; the last row uses the
        // final piece.
        const ScenarioSegment* chosen = nullptr;
        for (const ScenarioSegment& seg : branch.segments) {
            Rational from = seg.t_from.eval(s0);
            Rational to = seg.t_to.eval(s0);
            if (from == to) continue;
            if (from <= t && t < to) {
                chosen = &seg;
                break;
            }
            if (t == to) chosen = &seg; // keep last piece containing t at its end
        }
        if (chosen == nullptr) throw DomainError("sample point outside the profile domain");
        rows.push_back({t, chosen->area.eval(s0, t)});
    }
    return rows;
}

std::uint64_t effective_seed() {
    if (const char* env = std::getenv("NOK_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return static_cast<std::uint64_t>(v);
        throw DomainError("NOK_SEED must be a decimal unsigned integer");
    }
    return kDefaultSeed;
}

namespace {

// Shoelace area of a polygon with rational vertices, in order.
Rational shoelace(const std::vector<std::pair<Rational, Rational>>& poly) {
    Rational twice;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& [x1, y1] = poly[i];
        const auto& [x2, y2] = poly[(i + 1) % poly.size()];
        twice += x1 * y2 - x2 * y1;
    }
    return twice.abs() / Rational(2);
}

StructuralResult structural_vc_continuity(Rng& rng) {
    StructuralResult out{"vc-continuity", true, ""};
    // Symbolic: the rising piece meets the plateau exactly, for all entry
    // times at once (entry time as the free parameter).
    for (int q = 2; q <= 10; ++q) {
        VCurveProfile prof = vcurve_profile({Polynomial::variable(), q}, Polynomial::variable());
        Polynomial meet = prof.rising.area.substitute_t(prof.breakpoint);
        if (meet != prof.plateau.area.coeff(0)) {
            out.holds = false;
            out.notes = "discontinuity at the breakpoint for q = " + std::to_string(q);
            return out;
        }
    }
    // Spot checks at random rational entry times.
    for (int i = 0; i < 20; ++i) {
        int q = 2 + static_cast<int>(rng.below(9));
        Rational tc = rng.uniform(Rational(1, 100), Rational(5));
        VCurveProfile prof =
            vcurve_profile({Polynomial::constant(tc), q}, Polynomial::constant(Rational(100)));
        Rational bp = prof.breakpoint.constant_value();
        if (prof.rising.area.eval(Rational(0), bp) != prof.plateau.area.eval(Rational(0), bp)) {
            out.holds = false;
            out.notes = "value mismatch at the breakpoint for t_C = " + tc.str();
            return out;
        }
    }
    out.notes = "rising piece meets the plateau exactly for q in 2..10 and 20 random entry times";
    return out;
}

StructuralResult structural_dominance(const std::vector<Scenario>& scenarios) {
    StructuralResult out{"simplex-cap-dominance", true, ""};
    ParamPolynomial cap = simplex_cap_area();
    for (const Scenario& s : scenarios) {
        for (const ScenarioBranch& b : s.branches) {
            SignVerdict v = profile_dominance(b.profile(), cap);
            if (v != SignVerdict::Positive && v != SignVerdict::IdenticallyZero) {
                out.holds = false;
                out.notes = s.name + " violates the simplex cap";
                return out;
            }
        }
    }
    out.notes = "every built-in profile lies under t^2/2 on its full domain";
    return out;
}

StructuralResult structural_shoelace(Rng& rng) {
    StructuralResult out{"shoelace-oracle", true, ""};
    for (int i = 0; i < 500; ++i) {
        Rational t = rng.uniform(Rational(1, 100), Rational(10));
        Rational m = rng.uniform(Rational(0), Rational(1)) * t;
        Rational hull = shoelace({{Rational(0), Rational(0)},
                                  {t - m, Rational(0)},
                                  {t - m, m},
                                  {Rational(0), t}});
        Rational formula = (t * t - m * m) / Rational(2);
        if (hull != formula) {
            out.holds = false;
            out.notes = "mismatch at t = " + t.str() + ", m = " + m.str();
            return out;
        }
    }
    out.notes = "hull area equals (t^2 - m^2)/2 on 500 random (t, m)";
    return out;
}

std::string format_deviation(double dev) {
    std::ostringstream os;
    os.setf(std::ios::scientific);
    os.precision(3);
    os << dev;
    return os.str();
}

} // namespace

VerificationReport run_builtin_suite(const VerifyOptions& opts, std::uint64_t seed) {
    VerificationReport report;
    report.seed = seed;

    std::vector<Scenario> scenarios;
    for (const std::string& name : builtin_scenario_names())
        scenarios.push_back(parse_scenario(builtin_scenario_json(name)));

    for (const Scenario& s : scenarios) report.results.push_back(verify(s, opts));

    // Margin floors, themselves certified from the sup enclosures.
    for (const MarginFloor& mf : margin_floors()) {
        StructuralResult sr{std::string("margin-floor-") + mf.name, false, ""};
        for (const VerificationResult& r : report.results) {
            if (r.name != mf.name) continue;
            sr.holds = r.holds && r.margin_lower_bound >= mf.floor;
            sr.notes = "requires margin >= " + mf.floor.str() + "; certified lower bound " +
                       r.margin_lower_bound.str();
        }
        report.structural.push_back(std::move(sr));
    }

    Rng rng(seed);
    report.structural.push_back(structural_vc_continuity(rng));
    report.structural.push_back(structural_dominance(scenarios));
    report.structural.push_back(structural_shoelace(rng));

    {
        StructuralResult sr{"numeric-crosscheck", true, ""};
        double worst = 0.0;
        for (const Scenario& s : scenarios) {
            double dev = numeric_crosscheck(s, 100, seed);
            worst = std::max(worst, dev);
        }
        sr.holds = worst <= 1e-9;
        sr.notes = "max relative deviation " + format_deviation(worst) +
                   " over 100 samples per certificate (tolerance 1e-09)";
        report.structural.push_back(std::move(sr));
    }

    return report;
}

} // namespace nok
