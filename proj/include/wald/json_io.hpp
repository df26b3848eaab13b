#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wald/bezout_lp.hpp"
#include "wald/classifier.hpp"
#include "wald/engine.hpp"
#include "wald/fat_points.hpp"
#include "wald/fixtures.hpp"

namespace wald::io {

using json = nlohmann::ordered_json;

// All parsers throw ParseError naming the offending field.

json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& where = "value");

json to_json(const ProjPoint& p);
ProjPoint point_from_json(const json& j, const std::string& where = "point");
json points_to_json(const std::vector<ProjPoint>& pts);
// Accepts {"points": [...]} or a bare array.
std::vector<ProjPoint> points_from_json(const json& j);

json to_json(const PlaneCurve& c);
PlaneCurve curve_from_json(const json& j, const std::string& where = "curve");

// {"curves": [...]} or a bare array of
//   {"type": "line", "through": [i, j]} | {"type": "conic", "through": [5 indices]} |
//   {"type": "explicit", "degree": d, "coeffs": [...], "attest_irreducible": bool}
// with optional "label" and "group". The shorthands {"line": [i, j]},
// {"conic": [...]} and {"curve": {...}} are also accepted.
AuxCurveSet aux_from_json(const std::vector<ProjPoint>& pts, const json& j);
json to_json(const AuxCurveSet& aux);

json to_json(const BezoutSystem& s);
BezoutSystem system_from_json(const json& j);
json to_json(const LowerBoundCertificate& c);
LowerBoundCertificate certificate_from_json(const json& j);

// {"m": k, "terms": [{"curve": ... | "line": [i, j] | "conic": [...],
//                     "coeff": c, "label": s}]}
json to_json(const FormalDivisor& d);
FormalDivisor divisor_from_json(const json& j, const std::vector<ProjPoint>& pts = {});

json to_json(const SweepEntry& e);
SweepEntry sweep_entry_from_json(const json& j);
json to_json(const UpperEvidence& e);
UpperEvidence evidence_from_json(const json& j);

json to_json(const AlphaResult& a);
AlphaResult alpha_from_json(const json& j);

json to_json(const WaldschmidtResult& r);
WaldschmidtResult result_from_json(const json& j);

json to_json(const ClassificationResult& r);
ClassificationResult report_from_json(const json& j);

json to_json(const FixtureSpec& f);
FixtureSpec fixture_from_json(const json& j);

json parse_text(const std::string& text, const std::string& source = "input");

}  // namespace wald::io
