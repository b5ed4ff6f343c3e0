#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "packcert/arith.hpp"
#include "packcert/pointset.hpp"
#include "packcert/report.hpp"

namespace packcert {

inline constexpr int kSchemaVersion = 1;

/// {"num": "...", "den": "...", "approx": x}; the string fields are authoritative.
nlohmann::json to_json(const Rational& q);
/// {"rational": {...}, "coeff": {...}, "radicand": {...}, "approx": x} for a + coeff sqrt(radicand).
nlohmann::json to_json(const Surd& x);
nlohmann::json to_json(const WitnessValue& v);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const FeasibilityReport& r);
nlohmann::json to_json(const DesignProfile& p);

Rational rational_from_json(const nlohmann::json& j);

/// Compact text for table cells and CSV fields.
std::string format_value(const WitnessValue& v);
std::string format_witness(const Witness& w);

/// Header "id,status,witness,note" and one row per condition.
std::string to_csv(const FeasibilityReport& r);
std::string to_text(const FeasibilityReport& r);
std::string to_text(const DesignProfile& p);

std::string csv_escape(const std::string& field);

/// Point files. JSON: {"dim": d, "tolerance": t, "points": [[...], ...], "gram_scale": "1/2"}.
/// CSV: one point per line, '#' starts a comment. Entries are numbers or
/// strings; when every entry is an integer or "p/q" string the set is read
/// exactly. tol_override replaces the file's tolerance.
PointSet parse_points_json(const std::string& text, std::optional<double> tol_override = std::nullopt);
PointSet parse_points_csv(const std::string& text, std::optional<double> tol_override = std::nullopt);

/// Dispatches on extension (.csv, otherwise JSON).
PointSet read_points(const std::string& path, std::optional<double> tol_override = std::nullopt);

/// Exact coordinates are written as "p/q" strings with their gram_scale;
/// otherwise coordinates are written as numbers.
nlohmann::json points_to_json(const PointSet& x);
void write_points(const PointSet& x, const std::string& path);

}  // namespace packcert
