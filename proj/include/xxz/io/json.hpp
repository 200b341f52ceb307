#pragma once

#include <json.hpp>

#include <string>

#include "xxz/conj/conjectures.hpp"
#include "xxz/numeric/bethe.hpp"

namespace xxz::io {

using nlohmann::ordered_json;

/// Exact values are strings ("p/q") or {"a", "b"} for a + b q; floats are
/// {"re", "im"} decimal strings with enough digits to round-trip.
ordered_json to_json(const BigRat& x);
ordered_json to_json(const CycloQ& x);
ordered_json to_json(const BigComplex& z);
ordered_json to_json(const ReportValue& v);
ordered_json to_json(const VerificationReport& r);
/// {"boundary", "n", "L", "precision", "residual", "roots": [{re, im, precision}], "wt": [...]}
ordered_json to_json(const RootSet& rs);

/// Header and one row in the order of the report schema.
std::string csv_header();
std::string to_csv(const VerificationReport& r);

/// Inverse of to_json for exact values.
BigRat rat_from_json(const ordered_json& j);
CycloQ cyclo_from_json(const ordered_json& j);

}  // namespace xxz::io
