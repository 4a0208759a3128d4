#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "levelcover/bounds.hpp"
#include "levelcover/constructions.hpp"
#include "levelcover/domination.hpp"
#include "levelcover/solver.hpp"

namespace levelcover {

inline constexpr const char* kSchema = "levelcover/1";

using Json = nlohmann::ordered_json;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);
/// Parses "p" or "p/q"; throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);
/// Fixed 6-decimal rendering, so CSV output does not depend on the C++ library's shortest form.
std::string format_double(double x);

Json pair_to_json(const DominatingPair& d);
/// Accepts an optional "schema" key. Malformed documents raise FormatError; a well-formed
/// document with invalid levels raises std::invalid_argument.
DominatingPair pair_from_json(const nlohmann::json& j);

Json cover_stats_to_json(const CoverStats& s);
Json construction_to_json(const Construction& c, bool with_cover_stats);
Json verdict_to_json(const DominatingPair& d, const DominationVerdict& v, const ConditionCounts& counts);
Json solve_to_json(const SolveResult& r);
Json turan_to_json(const TuranResult& r, int n);
Json bound_report_to_json(const BoundReport& r);

std::vector<std::string> bound_report_csv_header();
std::vector<std::string> bound_report_csv_row(const BoundReport& r);

/// Joins fields with commas and ends the line with '\n'.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace levelcover
