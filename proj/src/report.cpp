#include "nok/report.hpp"

#include <fstream>

#include "json.hpp"

namespace nok {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json result_to_json(const VerificationResult& r) {
    ordered_json jr;
    jr["name"] = r.name;
    jr["holds"] = r.holds;
    ordered_json volumes = ordered_json::object();
    for (const BranchResult& b : r.branches) {
        std::string key = "[" + b.interval.lo.str() + "," + b.interval.hi.str() + "]";
        ordered_json coeffs = ordered_json::array();
        for (const Rational& c : b.volume.coeffs()) coeffs.push_back(c.str());
        volumes[key] = std::move(coeffs);
    }
    jr["volume_poly"] = std::move(volumes);
    jr["sup_enclosure"] = {r.sup.lo.str(), r.sup.hi.str()};
    jr["margin_lower_bound"] = r.margin_lower_bound.str();
    jr["notes"] = r.notes;
    if (!r.violations.empty()) jr["violations"] = r.violations;
    return jr;
}

ordered_json report_body(const VerificationReport& report) {
    ordered_json j;
    j["version"] = report.schema_version;
    j["tool_version"] = report.tool_version;
    j["seed"] = report.seed;
    ordered_json results = ordered_json::array();
    for (const VerificationResult& r : report.results) results.push_back(result_to_json(r));
    j["results"] = std::move(results);
    ordered_json structural = ordered_json::array();
    for (const StructuralResult& s : report.structural) {
        ordered_json js;
        js["name"] = s.name;
        js["holds"] = s.holds;
        js["notes"] = s.notes;
        structural.push_back(std::move(js));
    }
    j["structural"] = std::move(structural);
    j["status"] = report.pass() ? "pass" : "fail";
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& report) {
    return report_body(report).dump(2) + "\n";
}

void write_report_file(const VerificationReport& report, const std::string& path) {
    ordered_json body = report_body(report);
    {
        std::ifstream in(path);
        if (in.good()) {
            ordered_json previous = ordered_json::parse(in, nullptr, false);
            if (previous.is_object()) {
                for (auto& [key, value] : previous.items())
                    if (!body.contains(key)) body[key] = value;
            }
        }
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write report to '" + path + "'");
    out << body.dump(2) << "\n";
}

std::string to_decimal(const Rational& r, int significant_digits) {
    if (significant_digits < 1) throw DomainError("need at least one significant digit");
    if (r.is_zero()) return "0";
    bool neg = r.sign() < 0;
    BigInt N = boost::multiprecision::abs(r.num());
    BigInt D = r.den();

    // Exponent e with 10^(e-1) <= N/D < 10^e.
    long long e = static_cast<long long>(N.str().size()) -
                  static_cast<long long>(D.str().size()) + 1;
    auto pow10 = [](long long k) {
        BigInt p = 1;
        for (long long i = 0; i < k; ++i) p *= 10;
        return p;
    };
    auto below = [&](long long k) { // N/D < 10^k, any sign of k
        return k >= 0 ? N < D * pow10(k) : N * pow10(-k) < D;
    };
    while (!below(e)) ++e;
    while (below(e - 1)) --e;

    // First `significant_digits` digits, rounded half up.
    long long shift = significant_digits - e;
    BigInt scaled;
    if (shift >= 0)
        scaled = N * pow10(shift + 1) / D;
    else
        scaled = N / (D * pow10(-shift - 1));
    BigInt digits = (scaled + 5) / 10;
    BigInt limit = pow10(significant_digits);
    if (digits >= limit) {
        digits /= 10;
        ++e;
    }

    std::string ds = digits.str();
    while (static_cast<int>(ds.size()) < significant_digits) ds.insert(ds.begin(), '0');

    std::string body;
    if (e <= 0) {
        body = "0." + std::string(static_cast<std::size_t>(-e), '0') + ds;
    } else if (e >= significant_digits) {
        body = ds + std::string(static_cast<std::size_t>(e - significant_digits), '0');
    } else {
        body = ds.substr(0, static_cast<std::size_t>(e)) + "." +
               ds.substr(static_cast<std::size_t>(e));
    }
    if (body.find('.') != std::string::npos) {
        while (body.back() == '0') body.pop_back();
        if (body.back() == '.') body.pop_back();
    }
    return neg ? "-" + body : body;
}

} // namespace nok
