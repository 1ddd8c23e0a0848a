#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nok/expr.hpp"
#include "nok/slice_model.hpp"

namespace nok {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";
inline constexpr std::uint64_t kDefaultSeed = 424242;

/// Parameter range with per-endpoint openness. Verification works on the
/// closure; a root of the comparison polynomial sitting exactly on an
/// open endpoint does not fail a certificate.
struct ParamInterval {
    Rational lo;
    Rational hi;
    bool open_lo = false;
    bool open_hi = false;

    RationalInterval closure() const { return {lo, hi}; }
};

struct ScenarioSegment {
    Polynomial t_from;
    Polynomial t_to;
    ParamPolynomial area;
    std::vector<SliceConstraint> constraints;
};

struct ScenarioBranch {
    RationalInterval interval;
    std::vector<ScenarioSegment> segments;

    PiecewiseProfile profile() const;
};

/// A parameter interval, per-branch slice profiles and a threshold: the
/// claim that the Fubini volume of every branch profile stays strictly
/// below the threshold across the whole parameter interval.
struct Scenario {
    std::string name;
    std::string param_name;
    ParamInterval param_interval;
    Rational threshold;
    bool strict = true;
    std::vector<ScenarioBranch> branches;
    std::string notes;
};

/// Structural parse of a scenario document (JSON text): field presence,
/// expression syntax, rational literals. No mathematical validation.
Scenario parse_scenario(const std::string& json_text);

/// Mathematical validation: branch subintervals partition the parameter
/// interval, profiles validate, every segment area is dominated by each
/// declared constraint and by the simplex cap on its own range.
ValidationResult validate_scenario(const Scenario& s);

/// parse + validate; throws ScenarioError listing every violation.
Scenario load_scenario(const std::string& json_text);

struct VerifyOptions {
    Rational width_tol = Rational(1, 1000000000);
};

struct BranchResult {
    RationalInterval interval;
    Polynomial volume;
    SignVerdict verdict = SignVerdict::Mixed;
    EnclosureRat sup{Rational(0), Rational(0)};
    Rational margin_lo{0};
};

struct VerificationResult {
    std::string name;
    bool holds = false;
    std::vector<BranchResult> branches;
    EnclosureRat sup{Rational(0), Rational(0)}; // max over branches
    Rational margin_lower_bound{0};
    std::vector<std::string> violations;
    std::string notes;
};

/// Verifies one scenario: revalidates (an invalid scenario fails safe with
/// the violations recorded), computes per-branch exact volumes, compares
/// against the threshold with the scenario's strictness and encloses the
/// supremum to derive a certified margin lower bound.
VerificationResult verify(const Scenario& s, const VerifyOptions& opts = {});

std::vector<std::string> builtin_scenario_names();
const std::string& builtin_scenario_json(const std::string& name);
Scenario load_builtin(const std::string& name);

struct StructuralResult {
    std::string name;
    bool holds = false;
    std::string notes;
};

struct VerificationReport {
    std::string schema_version = kReportSchemaVersion;
    std::string tool_version = kToolVersion;
    std::uint64_t seed = kDefaultSeed;
    std::vector<VerificationResult> results;
    std::vector<StructuralResult> structural;

    bool pass() const;
};

/// Runs the five built-in certificates plus the structural suites
/// (profile continuity of the curve bound, simplex-cap dominance, the
/// shoelace area oracle, the floating-point cross-check and the margin
/// floors). Failures are recorded, never raised.
VerificationReport run_builtin_suite(const VerifyOptions& opts = {},
                                     std::uint64_t seed = kDefaultSeed);

/// Max relative deviation between the exact volume polynomial and
/// adaptive Simpson quadrature of the piecewise areas at n random
/// parameter values.
double numeric_crosscheck(const Scenario& s, int n_samples, std::uint64_t seed);

struct ProfileSample {
    Rational t;
    Rational area;
};

/// n+1 rows sampled uniformly over [0, mu-cap] at the fixed parameter
/// value; at interior breakpoints the right piece wins (profiles may
/// jump). Throws DomainError for parameter values outside the interval.
std::vector<ProfileSample> sample_profile(const Scenario& s, const Rational& s0, int n);

/// NOK_SEED environment override, else the default seed.
std::uint64_t effective_seed();

} // namespace nok
