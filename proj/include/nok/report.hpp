#pragma once

#include <string>

#include "nok/scenario.hpp"

namespace nok {

/// Deterministic JSON rendering of a report: fixed field order, exact
/// rational strings, newline-terminated. Identical inputs give identical
/// bytes.
std::string report_to_json(const VerificationReport& report);

/// Writes the report to path. If the file already holds a JSON object,
/// unknown top-level fields are preserved on the round-trip.
void write_report_file(const VerificationReport& report, const std::string& path);

/// Exact rational rendered as decimal with the given number of
/// significant digits (round half up), plain notation, trailing zeros
/// trimmed.
std::string to_decimal(const Rational& r, int significant_digits = 12);

} // namespace nok
