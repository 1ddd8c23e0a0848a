#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nok/bounds.hpp"
#include "nok/report.hpp"
#include "nok/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertificateFailed = 1;
constexpr int kExitInvalidInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nok::Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nok::Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    try {
        return nok::Rational::parse(text);
    } catch (const nok::ParseError& e) {
        throw nok::Error(flag + ": " + e.what() + " (decimals are rejected; use p/q)");
    }
}

void print_result_line(const nok::VerificationResult& r) {
    std::cout << (r.holds ? "PASS" : "FAIL") << "  " << r.name;
    if (r.holds)
        std::cout << "  margin >= " << r.margin_lower_bound.str() << "  (sup in ["
                  << r.sup.lo.str() << ", " << r.sup.hi.str() << "])";
    std::cout << "\n";
    for (const std::string& v : r.violations) std::cout << "      " << v << "\n";
}

struct VerifyArgs {
    bool all_builtin = false;
    std::string scenario_path;
    std::string report_path;
    std::string margin_tol = "1/1000000000";
};

int run_verify(const VerifyArgs& args) {
    if (args.all_builtin == !args.scenario_path.empty()) {
        std::cerr << "verify: exactly one of --all-builtin and --scenario is required\n";
        return kExitInvalidInput;
    }
    nok::VerifyOptions opts;
    opts.width_tol = parse_rational_flag(args.margin_tol, "--margin-tol");
    if (opts.width_tol.sign() <= 0) throw nok::Error("--margin-tol must be positive");
    std::uint64_t seed = nok::effective_seed();

    nok::VerificationReport report;
    if (args.all_builtin) {
        report = nok::run_builtin_suite(opts, seed);
    } else {
        nok::Scenario s = nok::load_scenario(read_file(args.scenario_path));
        report.seed = seed;
        report.results.push_back(nok::verify(s, opts));
    }

    for (const nok::VerificationResult& r : report.results) print_result_line(r);
    for (const nok::StructuralResult& s : report.structural)
        std::cout << (s.holds ? "PASS" : "FAIL") << "  " << s.name << "  (" << s.notes << ")\n";
    std::cout << "status: " << (report.pass() ? "pass" : "fail") << "\n";

    if (!args.report_path.empty()) nok::write_report_file(report, args.report_path);
    return report.pass() ? kExitOk : kExitCertificateFailed;
}

struct ProfileArgs {
    std::string scenario_path;
    std::string builtin;
    std::string param_value;
    int samples = 300;
    std::string out_path;
};

int run_profile(const ProfileArgs& args) {
    if (args.scenario_path.empty() == args.builtin.empty()) {
        std::cerr << "profile: exactly one of --scenario and --builtin is required\n";
        return kExitInvalidInput;
    }
    nok::Scenario s = args.builtin.empty() ? nok::load_scenario(read_file(args.scenario_path))
                                           : nok::load_builtin(args.builtin);
    nok::Rational value = parse_rational_flag(args.param_value, "--param-value");
    auto rows = nok::sample_profile(s, value, args.samples);

    std::ofstream out(args.out_path, std::ios::trunc);
    if (!out) throw nok::Error("cannot write '" + args.out_path + "'");
    out << "t,area\n";
    for (const nok::ProfileSample& row : rows)
        out << nok::to_decimal(row.t) << "," << nok::to_decimal(row.area) << "\n";
    return kExitOk;
}

void print_exact(const std::string& label, const nok::Rational& v) {
    std::cout << label << " = " << v.str() << " (= " << nok::to_decimal(v) << ")\n";
}

nok::SurfaceCollapse parse_surfaces_flag(const std::string& text) {
    nok::SurfaceCollapse sc;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto p1 = item.find(':');
        auto p2 = item.find(':', p1 == std::string::npos ? p1 : p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos)
            throw nok::Error("--surfaces entries must look like m:t1:m0");
        nok::SurfaceTerm term;
        term.m = std::stoi(item.substr(0, p1));
        auto entry = nok::parse_expr(item.substr(p1 + 1, p2 - p1 - 1), "eps");
        auto mult = nok::parse_expr(item.substr(p2 + 1), "eps");
        if (entry.degree_t() > 0 || mult.degree_t() > 0)
            throw nok::Error("--surfaces expressions must not involve t");
        term.t1 = entry.coeff(0);
        term.m0 = mult.coeff(0);
        sc.surfaces.push_back(std::move(term));
    }
    if (sc.surfaces.empty()) throw nok::Error("--surfaces is empty");
    return sc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nok - exact certificate engine for slice-area volume bounds"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run certificates and emit a JSON report");
    verify->add_flag("--all-builtin", verify_args.all_builtin, "run the built-in suite");
    verify->add_option("--scenario", verify_args.scenario_path, "scenario document (JSON)");
    verify->add_option("--report", verify_args.report_path, "write the JSON report here");
    verify->add_option("--margin-tol", verify_args.margin_tol,
                       "width tolerance for sup enclosures (rational)");

    ProfileArgs profile_args;
    CLI::App* profile = app.add_subcommand("profile", "sample a slice profile as CSV");
    profile->add_option("--scenario", profile_args.scenario_path, "scenario document (JSON)");
    profile->add_option("--builtin", profile_args.builtin, "built-in scenario name");
    profile->add_option("--param-value", profile_args.param_value, "parameter value (rational)")
        ->required();
    profile->add_option("--samples", profile_args.samples, "number of steps (rows - 1)");
    profile->add_option("--out", profile_args.out_path, "output CSV path")->required();

    CLI::App* bounds = app.add_subcommand("bounds", "query the bound calculators");
    bounds->require_subcommand(1);

    std::string b3_text, eps_text, t_text, deg_text, tc_text, surfaces_text;
    int q_flag = 0;

    CLI::App* debarre = bounds->add_subcommand(
        "debarre", "least origin multiplicity of a non-degenerate Seshadri curve");
    debarre->add_option("--b3", b3_text, "volume B^3 (rational)")->required();
    debarre->add_option("--eps", eps_text, "Seshadri cap (rational)")->required();

    CLI::App* adj = bounds->add_subcommand("adjunction-cap",
                                           "Seshadri upper bound from the adjunction chain");
    adj->add_option("--t", t_text, "time t (rational)")->required();
    adj->add_option("--deg", deg_text, "curve degree floor (rational)")->required();

    CLI::App* mu = bounds->add_subcommand("mu-cap", "collapse time of a surface constraint");
    mu->add_option("--surfaces", surfaces_text, "comma list of m:t1:m0 (exprs in eps)")
        ->required();
    mu->add_option("--eps", eps_text, "parameter value (rational)")->required();

    CLI::App* vcp = bounds->add_subcommand("vc-profile", "curve profile pieces");
    vcp->add_option("--q", q_flag, "origin multiplicity (>= 2)")->required();
    vcp->add_option("--tc", tc_text, "entry time (rational)")->required();

    CLI::App* sw = bounds->add_subcommand("seshadri-width", "width cap q*eps/(q-1)");
    sw->add_option("--q", q_flag, "origin multiplicity (>= 2)")->required();
    sw->add_option("--eps", eps_text, "Seshadri constant (rational)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (verify->parsed()) return run_verify(verify_args);
        if (profile->parsed()) return run_profile(profile_args);

        if (debarre->parsed()) {
            int q = nok::debarre_min_mult(parse_rational_flag(b3_text, "--b3"),
                                          parse_rational_flag(eps_text, "--eps"));
            std::cout << "q = " << q << "\n";
            return kExitOk;
        }
        if (adj->parsed()) {
            nok::Rational t = parse_rational_flag(t_text, "--t");
            nok::Rational d = parse_rational_flag(deg_text, "--deg");
            nok::Polynomial cap =
                nok::adjunction_eps_cap(nok::Polynomial::constant(t), d);
            print_exact("eps cap", cap.constant_value());
            return kExitOk;
        }
        if (mu->parsed()) {
            nok::SurfaceCollapse sc = parse_surfaces_flag(surfaces_text);
            nok::SurfaceProfile prof = nok::surface_collapse_area(sc);
            if (!prof.has_collapse)
                throw nok::Error("width slope is zero: no collapse time (sum of m_i is 1)");
            nok::Rational eps = parse_rational_flag(eps_text, "--eps");
            std::cout << "collapse(eps) = " << prof.collapse.str("eps") << "\n";
            print_exact("mu cap", prof.collapse.eval(eps));
            return kExitOk;
        }
        if (vcp->parsed()) {
            nok::Rational tc = parse_rational_flag(tc_text, "--tc");
            nok::VCurveProfile prof = nok::vcurve_profile(
                {nok::Polynomial::constant(tc), q_flag}, nok::Polynomial::constant(tc * 3));
            print_exact("breakpoint", prof.breakpoint.constant_value());
            print_exact("plateau", prof.plateau.area.coeff(0).constant_value());
            std::cout << "rising area = " << nok::expr_to_string(prof.rising.area, "eps")
                      << "\n";
            return kExitOk;
        }
        if (sw->parsed()) {
            nok::Rational eps = parse_rational_flag(eps_text, "--eps");
            print_exact("width cap", nok::seshadri_width_cap(q_flag, eps));
            print_exact("entry-time cap", nok::remark_ts_cap(q_flag, eps));
            return kExitOk;
        }
    } catch (const nok::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
