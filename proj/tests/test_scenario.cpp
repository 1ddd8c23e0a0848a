#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "json.hpp"

#include "nok/quadrature.hpp"
#include "nok/report.hpp"
#include "nok/scenario.hpp"

using namespace nok;

namespace {

const VerifyOptions kOpts{};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Expected closed forms, built independently of the integration path.
Polynomial case31_closed_form() { return Polynomial::monomial(Rational(45, 32), 3); }

Polynomial case32_main_closed_form() {
    return Polynomial({Rational(0), Rational(0), Rational(4), Rational(-32, 27)});
}

Polynomial case32_tail_closed_form() {
    return case32_main_closed_form() +
           Polynomial({Rational(-30), Rational(17)}).pow(3) / Rational(486);
}

Polynomial case33_closed_form() {
    Polynomial s = Polynomial::variable();
    Polynomial six_minus = Polynomial({Rational(6), Rational(-1)});
    Polynomial six_minus_two = Polynomial({Rational(6), Rational(-2)});
    Polynomial two_minus_third = Polynomial({Rational(2), Rational(-1, 3)});
    return (six_minus.pow(3) - six_minus_two.pow(3)) / Rational(6) +
           two_minus_third.pow(3) / Rational(6);
}

Polynomial cor1_closed_form() {
    // 27/6 + t1^3/162 + ((t1-3)/2) * (9 - 64(t1-3)^2/3 - 64(t1-3)^2/81)
    Polynomial t1 = Polynomial::variable();
    Polynomial d = t1 - Polynomial::constant(Rational(3));
    Polynomial inner = Polynomial::constant(Rational(9)) -
                       Rational(64, 3) * d * d - Rational(64, 81) * d * d;
    return Polynomial::constant(Rational(27, 6)) + t1.pow(3) / Rational(162) +
           d / Rational(2) * inner;
}

Polynomial cor2_closed_form() {
    Polynomial t1 = Polynomial::variable();
    Polynomial five_t_minus = Polynomial({Rational(-15), Rational(5)});
    return t1.pow(3) / Rational(6) - five_t_minus.pow(3) / Rational(6) +
           t1.pow(3) / Rational(162);
}

} // namespace

TEST_CASE("built-ins load and validate") {
    for (const std::string& name : builtin_scenario_names()) {
        Scenario s = load_builtin(name); // throws on any violation
        CHECK(s.name == name);
        CHECK(validate_scenario(s).ok);
    }
}

TEST_CASE("shipped scenario files match the embedded documents") {
    for (const std::string& name : builtin_scenario_names()) {
        std::string path = std::string(NOK_SCENARIO_DIR) + "/" + name + ".json";
        CHECK(read_file(path) == builtin_scenario_json(name));
    }
}

TEST_CASE("case 3.1: closed form, sup and margin") {
    VerificationResult r = verify(load_builtin("thm-main-case-3.1"), kOpts);
    CHECK(r.holds);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].volume == case31_closed_form());
    CHECK(r.sup.lo == Rational(1215, 256));
    CHECK(r.sup.hi == Rational(1215, 256));
    CHECK(r.margin_lower_bound == Rational(3779, 768));
}

TEST_CASE("case 3.2: branch split, closed forms, sup and margin") {
    Scenario s = load_builtin("thm-main-case-3.2");
    REQUIRE(s.branches.size() == 2);
    CHECK(s.branches[0].interval.hi == Rational(30, 17));
    CHECK(s.branches[1].interval.lo == Rational(30, 17));

    VerificationResult r = verify(s, kOpts);
    CHECK(r.holds);
    CHECK(r.branches[0].volume == case32_main_closed_form());
    CHECK(r.branches[1].volume == case32_tail_closed_form());
    // tail value at eps = 2 is 32/243; total sup 176/27 + 32/243
    CHECK((r.branches[1].volume - case32_main_closed_form()).eval(Rational(2)) ==
          Rational(32, 243));
    CHECK(r.sup.lo == Rational(1616, 243));
    CHECK(r.sup.hi == Rational(1616, 243));
    CHECK(r.margin_lower_bound == Rational(29, 3) - Rational(1616, 243));
}

TEST_CASE("case 3.3: closed form, sup at the left end, margin 17/162") {
    VerificationResult r = verify(load_builtin("thm-main-case-3.3"), kOpts);
    CHECK(r.holds);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].volume == case33_closed_form());
    CHECK(r.sup.lo == Rational(788, 81));
    CHECK(r.sup.hi == Rational(788, 81));
    CHECK(r.margin_lower_bound == Rational(17, 162));
}

TEST_CASE("corollary case 1: true sup via critical points") {
    VerificationResult r = verify(load_builtin("cor-main-case-1"), kOpts);
    CHECK(r.holds);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].volume == cor1_closed_form());
    // the volume is decreasing on [7/2, 15/4]; sup at the left endpoint
    CHECK(r.sup.lo == Rational(811, 144));
    CHECK(r.sup.hi == Rational(811, 144));
    CHECK(r.margin_lower_bound == Rational(149, 144));
    CHECK(r.margin_lower_bound >= Rational(1));
}

TEST_CASE("corollary case 2: interior irrational sup, margin >= 1") {
    VerificationResult r = verify(load_builtin("cor-main-case-2"), kOpts);
    CHECK(r.holds);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].volume == cor2_closed_form());
    // the sup is attained at an interior critical point; the enclosure is tight
    CHECK(r.sup.hi - r.sup.lo <= kOpts.width_tol);
    CHECK(r.sup.lo > r.branches[0].volume.eval(Rational(3)));
    CHECK(r.sup.lo > r.branches[0].volume.eval(Rational(7, 2)));
    CHECK(r.margin_lower_bound >= Rational(1));
}

TEST_CASE("negative control: threshold at the computed sup flips each verdict") {
    for (const std::string& name : builtin_scenario_names()) {
        Scenario s = load_builtin(name);
        VerificationResult ok = verify(s, kOpts);
        REQUIRE(ok.holds);
        s.threshold = ok.sup.lo;
        VerificationResult flipped = verify(s, kOpts);
        CHECK(!flipped.holds);
    }
}

TEST_CASE("negative control: weakening the case 3.1 curve to q = 3") {
    // A weaker declared curve cannot justify the shipped profile: the
    // plateau segment no longer fits a single piece of the q = 3 bound.
    std::string text = builtin_scenario_json("thm-main-case-3.1");
    auto doc = nlohmann::json::parse(text);
    for (auto& seg : doc["branches"][0]["segments"])
        for (auto& c : seg["constraints"])
            if (c["type"] == "vcurve") c["q"] = 3;
    Scenario s = parse_scenario(doc.dump());
    CHECK(!validate_scenario(s).ok);
    VerificationResult r = verify(s, kOpts);
    CHECK(!r.holds);
    CHECK(!r.violations.empty());

    // And the converse mutation: a steeper claimed area under the original
    // q = 5 constraint is a plain dominance violation.
    auto doc2 = nlohmann::json::parse(text);
    doc2["branches"][0]["segments"][1]["area"] = "(t^2 - 3*(t - eps)^2)/2";
    Scenario s2 = parse_scenario(doc2.dump());
    VerificationResult r2 = verify(s2, kOpts);
    CHECK(!r2.holds);
}

TEST_CASE("overlapping segments are rejected at load") {
    std::string text = builtin_scenario_json("thm-main-case-3.1");
    auto doc = nlohmann::json::parse(text);
    doc["branches"][0]["segments"][1]["t_from"] = "eps/2"; // breaks contiguity
    CHECK_THROWS_AS(load_scenario(doc.dump()), ScenarioError);
}

TEST_CASE("structural document errors") {
    CHECK_THROWS_AS(parse_scenario("not json"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario(R"({"name":"x"})"), ScenarioError);
    // unknown identifier inside an expression
    std::string text = builtin_scenario_json("thm-main-case-3.1");
    auto doc = nlohmann::json::parse(text);
    doc["branches"][0]["segments"][0]["area"] = "t^2/2 + gamma";
    CHECK_THROWS_AS(parse_scenario(doc.dump()), ScenarioError);
}

TEST_CASE("builtin suite aggregates and is deterministic") {
    VerificationReport a = run_builtin_suite(kOpts, 20200214);
    VerificationReport b = run_builtin_suite(kOpts, 20200214);
    CHECK(a.pass());
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(a.results.size() == 5);

    // margin floors recorded and certified
    int floors_seen = 0;
    for (const StructuralResult& s : a.structural)
        if (s.name.rfind("margin-floor-", 0) == 0) {
            CHECK(s.holds);
            ++floors_seen;
        }
    CHECK(floors_seen == 5);
    for (const StructuralResult& s : a.structural) CHECK(s.holds);

    // a different seed still passes but yields a different report body
    VerificationReport c = run_builtin_suite(kOpts, 1);
    CHECK(c.pass());
    CHECK(report_to_json(c) != report_to_json(a));
}

TEST_CASE("numeric cross-check per certificate") {
    for (const std::string& name : builtin_scenario_names()) {
        double dev = numeric_crosscheck(load_builtin(name), 100, 99);
        CHECK(dev <= 1e-9);
    }
}

TEST_CASE("cross-check straddles the case 3.2 branch point") {
    Scenario s = load_builtin("thm-main-case-3.2");
    Rational split(30, 17);
    for (Rational s0 : {split - Rational(1, 1000), split, split + Rational(1, 1000)}) {
        std::size_t bi = (s0 <= split) ? 0 : 1;
        const ScenarioBranch& branch = s.branches[bi];
        double exact = profile_volume(branch.profile()).eval(s0).to_double();
        double numeric = 0.0;
        for (const ScenarioSegment& seg : branch.segments) {
            Polynomial slice = seg.area.at_param(s0);
            numeric += adaptive_simpson([&](double t) { return slice.eval_double(t); },
                                        seg.t_from.eval(s0).to_double(),
                                        seg.t_to.eval(s0).to_double());
        }
        CHECK(std::abs(numeric - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
    // both branch volumes agree at the split itself: the tail is empty there
    CHECK(profile_volume(s.branches[0].profile()).eval(split) ==
          profile_volume(s.branches[1].profile()).eval(split));
}

TEST_CASE("profile sampling") {
    Scenario s = load_builtin("thm-main-case-3.1");
    auto rows = sample_profile(s, Rational(1), 300);
    REQUIRE(rows.size() == 301);
    // strictly increasing t over [0, 3]
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].t < rows[i].t);
    CHECK(rows.front().t == Rational(0));
    CHECK(rows.back().t == Rational(3));
    // plateau value 5/8 past the breakpoint
    CHECK(rows.back().area == Rational(5, 8));
    // piecewise arc: t^2/2 at t = 1/2
    CHECK(rows[25].t == Rational(1, 4));
    CHECK(rows[25].area == Rational(1, 32));

    // the jump of case 3.3 at eps = 2 is visible at t = 4 (right piece wins)
    Scenario c33 = load_builtin("thm-main-case-3.3");
    auto rows33 = sample_profile(c33, Rational(2), 300);
    REQUIRE(rows33.size() == 301);
    CHECK(rows33[225].t == Rational(4));
    CHECK(rows33[225].area == Rational(8, 9));
    CHECK(rows33[224].area > Rational(5)); // left of the jump the hull bound is near 6

    CHECK_THROWS_AS(sample_profile(s, Rational(2), 10), DomainError);
}

TEST_CASE("single-segment simplex scenario") {
    const std::string doc = R"({
      "name": "simplex-only",
      "param": "sig",
      "param_interval": ["1", "2"],
      "threshold": "10",
      "branches": [
        { "param_interval": ["1", "2"],
          "segments": [
            { "t_from": "0", "t_to": "sig", "area": "t^2/2",
              "constraints": [ { "type": "simplex_cap" } ] }
          ] }
      ]
    })";
    Scenario s = load_scenario(doc);
    VerificationResult r = verify(s, kOpts);
    CHECK(r.holds);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].volume == Polynomial::monomial(Rational(1, 6), 3));
    CHECK(r.sup.hi == Rational(8, 6));

    // polynomial quadrature is near-exact on a single cap segment
    CHECK(numeric_crosscheck(s, 50, 5) <= 1e-12);

    // a single parabola: every sampled row sits on t^2/2
    auto rows = sample_profile(s, Rational(3, 2), 64);
    for (const ProfileSample& row : rows) CHECK(row.area == row.t * row.t / Rational(2));
}

TEST_CASE("report JSON shape") {
    VerificationReport report = run_builtin_suite(kOpts, kDefaultSeed);
    std::string text = report_to_json(report);
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("version") == "1");
    CHECK(j.at("seed") == kDefaultSeed);
    CHECK(j.at("status") == "pass");
    REQUIRE(j.at("results").size() == 5);
    for (const auto& r : j.at("results")) {
        CHECK(r.contains("name"));
        CHECK(r.contains("holds"));
        CHECK(r.contains("volume_poly"));
        CHECK(r.contains("sup_enclosure"));
        CHECK(r.contains("margin_lower_bound"));
        CHECK(r.contains("notes"));
    }
    // case 3.1 volume rendered constant-term-first
    const auto& vol = j.at("results")[0].at("volume_poly").at("[0,3/2]");
    REQUIRE(vol.size() == 4);
    CHECK(vol[0] == "0");
    CHECK(vol[3] == "45/32");
}

TEST_CASE("failing results serialize with violations and a fail status") {
    Scenario s = load_builtin("thm-main-case-3.3");
    s.threshold = Rational(788, 81); // exactly the sup: strict verdict flips
    VerificationReport report;
    report.seed = 1;
    report.results.push_back(verify(s, kOpts));
    CHECK(!report.pass());
    auto j = nlohmann::json::parse(report_to_json(report));
    CHECK(j.at("status") == "fail");
    CHECK(j.at("results")[0].at("holds") == false);
    CHECK(j.at("results")[0].contains("violations"));
    CHECK(!j.at("results")[0].at("violations").empty());
}

TEST_CASE("unknown report fields survive a rewrite") {
    VerificationReport report = run_builtin_suite(kOpts, kDefaultSeed);
    std::string path = "nok_test_report.json";
    {
        std::ofstream out(path, std::ios::trunc);
        out << R"({"custom_annotation": "keep me", "seed": 0})" << "\n";
    }
    write_report_file(report, path);
    auto j = nlohmann::json::parse(read_file(path));
    CHECK(j.at("custom_annotation") == "keep me");
    CHECK(j.at("seed") == kDefaultSeed);
    std::remove(path.c_str());
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal(Rational(5, 8)) == "0.625");
    CHECK(to_decimal(Rational(1, 3)) == "0.333333333333");
    CHECK(to_decimal(Rational(-29, 3)) == "-9.66666666667");
    CHECK(to_decimal(Rational(0)) == "0");
    CHECK(to_decimal(Rational(1215, 256)) == "4.74609375");
    CHECK(to_decimal(Rational(1000000)) == "1000000");
    CHECK(to_decimal(Rational(1, 1024)) == "0.0009765625");
}
