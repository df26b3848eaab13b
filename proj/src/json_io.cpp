#include "wald/json_io.hpp"

#include "wald/errors.hpp"

namespace wald::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string sub(const std::string& where, const std::string& key) { return where + "." + key; }
std::string idx(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& array_field(const json& j, const char* key, const std::string& where) {
  const json& a = field(j, key, where);
  if (!a.is_array()) fail(sub(where, key), "expected an array");
  return a;
}

long long as_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) {
    try {
      Integer z = parse_integer(j.get<std::string>());
      if (!z.fits_slong_p()) fail(where, "integer out of range");
      return z.get_si();
    } catch (const ParseError&) {
      fail(where, "expected an integer");
    }
  }
  fail(where, "expected an integer");
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::size_t> index_list(const json& j, const std::string& where, std::size_t n_points) {
  if (!j.is_array()) fail(where, "expected an array of point indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    long long v = as_int(j[i], idx(where, i));
    if (v < 0 || (n_points && static_cast<std::size_t>(v) >= n_points)) fail(idx(where, i), "point index out of range");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

json rat_vector(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

RatVector rat_vector_from(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  RatVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], idx(where, i)));
  return out;
}

json value_json(const std::optional<Rational>& exact, const Rational& lower, const std::optional<Rational>& upper) {
  json v = json::object();
  if (exact) {
    v["exact"] = to_json(*exact);
  } else {
    v["lower"] = to_json(lower);
    v["upper"] = upper ? to_json(*upper) : json(nullptr);
  }
  return v;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

json to_json(const ProjPoint& p) {
  return json::array({p[0].get_str(), p[1].get_str(), p[2].get_str()});
}

ProjPoint point_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) fail(where, "expected three coordinates");
  std::array<Integer, 3> c;
  for (std::size_t i = 0; i < 3; ++i) {
    if (j[i].is_number_integer()) {
      c[i] = Integer(j[i].get<long>());
    } else if (j[i].is_string()) {
      try {
        c[i] = parse_integer(j[i].get<std::string>());
      } catch (const ParseError&) {
        fail(idx(where, i), "expected an integer string");
      }
    } else {
      fail(idx(where, i), "expected an integer string");
    }
  }
  try {
    return ProjPoint(c[0], c[1], c[2]);
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

json points_to_json(const std::vector<ProjPoint>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

std::vector<ProjPoint> points_from_json(const json& j) {
  const json& arr = j.is_object() ? field(j, "points", "input") : j;
  if (!arr.is_array()) fail("points", "expected an array");
  std::vector<ProjPoint> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(point_from_json(arr[i], idx("points", i)));
  return out;
}

json to_json(const PlaneCurve& c) { return json{{"degree", c.degree()}, {"coeffs", rat_vector(c.coeffs())}}; }

PlaneCurve curve_from_json(const json& j, const std::string& where) {
  long long d = as_int(field(j, "degree", where), sub(where, "degree"));
  if (d < 1 || d > 200) fail(sub(where, "degree"), "degree out of range");
  RatVector coeffs = rat_vector_from(field(j, "coeffs", where), sub(where, "coeffs"));
  try {
    return PlaneCurve(static_cast<int>(d), coeffs);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

AuxCurveSet aux_from_json(const std::vector<ProjPoint>& pts, const json& j) {
  AuxCurveSet aux(pts);
  const json& arr = j.is_object() ? array_field(j, "curves", "aux") : j;
  if (!arr.is_array()) fail("aux", "expected an array of curves");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string w = idx("aux.curves", i);
    const json& e = arr[i];
    if (!e.is_object()) fail(w, "expected an object");
    std::string group = e.contains("group") ? as_string(e["group"], sub(w, "group")) : "";
    std::string label = e.contains("label") ? as_string(e["label"], sub(w, "label")) : "";
    if (e.contains("type")) {
      const std::string type = as_string(e["type"], sub(w, "type"));
      if (type == "line" || type == "conic") {
        auto ix = index_list(field(e, "through", w), sub(w, "through"), pts.size());
        if (ix.size() != (type == "line" ? 2u : 5u)) fail(sub(w, "through"), "wrong number of point indices");
        std::vector<ProjPoint> sel;
        for (auto k : ix) sel.push_back(pts[k]);
        PlaneCurve c = type == "line" ? line_through(sel[0], sel[1]) : conic_through(sel);
        if (label.empty()) {
          if (type == "line") {
            aux.add_line(ix[0], ix[1], group);
          } else {
            aux.add_conic(ix, group);
          }
        } else {
          aux.add(c, false, label, group);
        }
      } else if (type == "explicit") {
        bool attest = e.contains("attest_irreducible") && e["attest_irreducible"].is_boolean() &&
                      e["attest_irreducible"].get<bool>();
        aux.add(curve_from_json(e, w), attest, label, group);
      } else {
        fail(sub(w, "type"), "expected \"line\", \"conic\" or \"explicit\"");
      }
    } else if (e.contains("line")) {
      auto ix = index_list(e["line"], sub(w, "line"), pts.size());
      if (ix.size() != 2) fail(sub(w, "line"), "expected two point indices");
      if (label.empty()) {
        aux.add_line(ix[0], ix[1], group);
      } else {
        aux.add(line_through(pts[ix[0]], pts[ix[1]]), false, label, group);
      }
    } else if (e.contains("conic")) {
      auto ix = index_list(e["conic"], sub(w, "conic"), pts.size());
      if (ix.size() != 5) fail(sub(w, "conic"), "expected five point indices");
      if (label.empty()) {
        aux.add_conic(ix, group);
      } else {
        std::vector<ProjPoint> five;
        for (auto k : ix) five.push_back(pts[k]);
        aux.add(conic_through(five), false, label, group);
      }
    } else if (e.contains("curve")) {
      bool attest = e.contains("attest_irreducible") && e["attest_irreducible"].is_boolean() &&
                    e["attest_irreducible"].get<bool>();
      aux.add(curve_from_json(e["curve"], sub(w, "curve")), attest, label, group);
    } else {
      fail(w, "expected one of \"line\", \"conic\", \"curve\"");
    }
  }
  return aux;
}

json to_json(const AuxCurveSet& aux) {
  json a = json::array();
  for (const auto& c : aux.curves()) {
    json e{{"type", "explicit"}, {"degree", c.curve.degree()}, {"coeffs", rat_vector(c.curve.coeffs())},
           {"label", c.label}, {"status", to_string(c.status)}};
    if (!c.group.empty()) e["group"] = c.group;
    if (c.status == CurveStatus::attested) e["attest_irreducible"] = true;
    a.push_back(e);
  }
  return json{{"curves", a}};
}

json to_json(const BezoutSystem& s) {
  json cons = json::array();
  for (const auto& c : s.constraints)
    cons.push_back(json{{"label", c.label}, {"coeffs", rat_vector(c.coeffs)}, {"rhs", to_json(c.rhs)}});
  return json{{"variables", s.variables}, {"constraints", cons}};
}

BezoutSystem system_from_json(const json& j) {
  BezoutSystem s;
  const json& vars = array_field(j, "variables", "system");
  for (std::size_t i = 0; i < vars.size(); ++i) s.variables.push_back(as_string(vars[i], idx("system.variables", i)));
  const json& cons = array_field(j, "constraints", "system");
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const std::string w = idx("system.constraints", i);
    Constraint c;
    c.label = as_string(field(cons[i], "label", w), sub(w, "label"));
    c.coeffs = rat_vector_from(field(cons[i], "coeffs", w), sub(w, "coeffs"));
    if (c.coeffs.size() != s.variables.size()) fail(sub(w, "coeffs"), "length differs from the variable count");
    c.rhs = rational_from_json(field(cons[i], "rhs", w), sub(w, "rhs"));
    s.constraints.push_back(std::move(c));
  }
  return s;
}

json to_json(const LowerBoundCertificate& c) {
  json duals = json::array();
  for (std::size_t i = 0; i < c.duals.size(); ++i) {
    const std::string label = i < c.system.constraints.size() ? c.system.constraints[i].label : std::to_string(i);
    duals.push_back(json{{"label", label}, {"mult", to_json(c.duals[i])}});
  }
  json out{{"bound", to_json(c.bound)}, {"duals", duals}, {"system", to_json(c.system)}};
  if (!c.primal.empty()) out["primal"] = rat_vector(c.primal);
  if (!c.support.empty()) out["support"] = c.support;
  return out;
}

LowerBoundCertificate certificate_from_json(const json& j) {
  LowerBoundCertificate c;
  c.bound = rational_from_json(field(j, "bound", "certificate"), "certificate.bound");
  c.system = system_from_json(field(j, "system", "certificate"));
  const json& duals = array_field(j, "duals", "certificate");
  if (duals.size() != c.system.constraints.size()) fail("certificate.duals", "length differs from the constraint count");
  for (std::size_t i = 0; i < duals.size(); ++i) {
    const std::string w = idx("certificate.duals", i);
    if (duals[i].is_object()) {
      std::string label = as_string(field(duals[i], "label", w), sub(w, "label"));
      if (label != c.system.constraints[i].label) fail(sub(w, "label"), "does not match constraint " + c.system.constraints[i].label);
      c.duals.push_back(rational_from_json(field(duals[i], "mult", w), sub(w, "mult")));
    } else {
      c.duals.push_back(rational_from_json(duals[i], w));
    }
  }
  if (j.contains("primal")) c.primal = rat_vector_from(j["primal"], "certificate.primal");
  if (j.contains("support")) c.support = index_list(j["support"], "certificate.support", 0);
  return c;
}

json to_json(const FormalDivisor& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    json e{{"curve", to_json(t.curve)}, {"coeff", t.coeff}};
    if (!t.label.empty()) e["label"] = t.label;
    terms.push_back(e);
  }
  return json{{"m", d.m}, {"terms", terms}};
}

FormalDivisor divisor_from_json(const json& j, const std::vector<ProjPoint>& pts) {
  FormalDivisor d;
  long long m = as_int(field(j, "m", "divisor"), "divisor.m");
  if (m < 1) fail("divisor.m", "must be positive");
  d.m = static_cast<int>(m);
  const json& terms = array_field(j, "terms", "divisor");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string w = idx("divisor.terms", i);
    const json& e = terms[i];
    if (!e.is_object()) fail(w, "expected an object");
    long long k = e.contains("coeff") ? as_int(e["coeff"], sub(w, "coeff")) : 1;
    if (k < 1) fail(sub(w, "coeff"), "must be positive");
    std::string label = e.contains("label") ? as_string(e["label"], sub(w, "label")) : "";
    std::optional<PlaneCurve> c;
    if (e.contains("curve")) {
      c = curve_from_json(e["curve"], sub(w, "curve"));
    } else if (e.contains("line")) {
      auto ix = index_list(e["line"], sub(w, "line"), pts.size());
      if (ix.size() != 2 || pts.empty()) fail(sub(w, "line"), "expected two point indices into the input");
      c = line_through(pts[ix[0]], pts[ix[1]]);
    } else if (e.contains("conic")) {
      auto ix = index_list(e["conic"], sub(w, "conic"), pts.size());
      if (ix.size() != 5 || pts.empty()) fail(sub(w, "conic"), "expected five point indices into the input");
      std::vector<ProjPoint> five;
      for (auto q : ix) five.push_back(pts[q]);
      c = conic_through(five);
    } else {
      fail(w, "expected one of \"curve\", \"line\", \"conic\"");
    }
    d.terms.push_back({*c, static_cast<long>(k), label});
  }
  return d;
}

json to_json(const SweepEntry& e) { return json::array({e.m, std::to_string(e.alpha), to_json(e.ratio)}); }

SweepEntry sweep_entry_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) fail("sweep entry", "expected [m, alpha, ratio]");
  SweepEntry e;
  e.m = static_cast<int>(as_int(j[0], "sweep entry.m"));
  e.alpha = static_cast<int>(as_int(j[1], "sweep entry.alpha"));
  e.ratio = rational_from_json(j[2], "sweep entry.ratio");
  e.running_min = e.ratio;
  return e;
}

namespace {

std::vector<SweepEntry> sweep_from_json(const json& j) {
  if (!j.is_array()) fail("sweep", "expected an array");
  std::vector<SweepEntry> out;
  for (const auto& e : j) {
    SweepEntry s = sweep_entry_from_json(e);
    if (!out.empty()) s.running_min = min(s.ratio, out.back().running_min);
    out.push_back(s);
  }
  return out;
}

json sweep_json(const std::vector<SweepEntry>& s) {
  json a = json::array();
  for (const auto& e : s) a.push_back(to_json(e));
  return a;
}

}  // namespace

json to_json(const UpperEvidence& e) {
  json out{{"kind", e.kind == UpperEvidence::Kind::construction ? "construction" : "sweep"},
           {"bound", to_json(e.bound)}};
  if (e.divisor) out["divisor"] = to_json(*e.divisor);
  if (e.entry) out["entry"] = to_json(*e.entry);
  return out;
}

UpperEvidence evidence_from_json(const json& j) {
  UpperEvidence e;
  std::string kind = as_string(field(j, "kind", "evidence"), "evidence.kind");
  if (kind == "construction") {
    e.kind = UpperEvidence::Kind::construction;
  } else if (kind == "sweep") {
    e.kind = UpperEvidence::Kind::sweep;
  } else {
    fail("evidence.kind", "expected \"construction\" or \"sweep\"");
  }
  e.bound = rational_from_json(field(j, "bound", "evidence"), "evidence.bound");
  if (j.contains("divisor")) e.divisor = divisor_from_json(j["divisor"]);
  if (j.contains("entry")) e.entry = sweep_entry_from_json(j["entry"]);
  return e;
}

json to_json(const AlphaResult& a) {
  json trace = json::array();
  for (const auto& [d, dim] : a.h0_trace) trace.push_back(json::array({d, dim}));
  return json{{"m", a.m}, {"alpha", a.alpha}, {"witness", to_json(a.witness)}, {"h0_trace", trace}};
}

AlphaResult alpha_from_json(const json& j) {
  AlphaResult a{static_cast<int>(as_int(field(j, "m", "alpha"), "alpha.m")),
                static_cast<int>(as_int(field(j, "alpha", "alpha"), "alpha.alpha")),
                curve_from_json(field(j, "witness", "alpha"), "alpha.witness"),
                {}};
  const json& trace = array_field(j, "h0_trace", "alpha");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const std::string w = idx("alpha.h0_trace", i);
    if (!trace[i].is_array() || trace[i].size() != 2) fail(w, "expected [degree, dimension]");
    a.h0_trace.emplace_back(static_cast<int>(as_int(trace[i][0], w)), static_cast<std::size_t>(as_int(trace[i][1], w)));
  }
  return a;
}

json to_json(const WaldschmidtResult& r) {
  json lower{{"bound", to_json(r.lower)}, {"certificate", r.lower_cert ? to_json(*r.lower_cert) : json(nullptr)}};
  json upper{{"bound", to_json(r.upper)}, {"evidence", r.upper_evidence ? to_json(*r.upper_evidence) : json(nullptr)}};
  return json{{"lower", lower},
              {"upper", upper},
              {"exact", r.exact ? to_json(*r.exact) : json(nullptr)},
              {"sweep", sweep_json(r.sweep)}};
}

WaldschmidtResult result_from_json(const json& j) {
  WaldschmidtResult r;
  const json& lower = field(j, "lower", "result");
  r.lower = rational_from_json(field(lower, "bound", "result.lower"), "result.lower.bound");
  if (lower.contains("certificate") && !lower["certificate"].is_null())
    r.lower_cert = certificate_from_json(lower["certificate"]);
  const json& upper = field(j, "upper", "result");
  r.upper = rational_from_json(field(upper, "bound", "result.upper"), "result.upper.bound");
  if (upper.contains("evidence") && !upper["evidence"].is_null()) r.upper_evidence = evidence_from_json(upper["evidence"]);
  if (j.contains("exact") && !j["exact"].is_null()) r.exact = rational_from_json(j["exact"], "result.exact");
  if (j.contains("sweep")) r.sweep = sweep_from_json(j["sweep"]);
  return r;
}

json to_json(const ClassificationResult& r) {
  json cites = json::array();
  for (const auto& c : r.citations) cites.push_back(json{{"loc", c.loc}, {"quote", c.quote}});
  json certs{{"lower", r.lower_cert ? to_json(*r.lower_cert) : json(nullptr)},
             {"upper", r.upper_evidence ? to_json(*r.upper_evidence) : json(nullptr)}};
  json value = value_json(r.exact, r.lower, r.upper);
  if (r.exact) value = json{{"exact", to_json(*r.exact)}};
  json out{{"family", r.family}, {"value", value}, {"bounds", json{{"lower", to_json(r.lower)}, {"upper", to_json(r.upper)}}},
           {"citations", cites}, {"certificates", certs}, {"sweep", sweep_json(r.sweep)}, {"notes", r.notes}};
  return out;
}

ClassificationResult report_from_json(const json& j) {
  ClassificationResult r;
  r.family = as_string(field(j, "family", "report"), "report.family");
  const json& value = field(j, "value", "report");
  if (value.contains("exact")) {
    r.exact = rational_from_json(value["exact"], "report.value.exact");
    r.lower = r.upper = *r.exact;
  } else {
    r.lower = rational_from_json(field(value, "lower", "report.value"), "report.value.lower");
    r.upper = rational_from_json(field(value, "upper", "report.value"), "report.value.upper");
  }
  if (j.contains("bounds")) {
    r.lower = rational_from_json(field(j["bounds"], "lower", "report.bounds"), "report.bounds.lower");
    r.upper = rational_from_json(field(j["bounds"], "upper", "report.bounds"), "report.bounds.upper");
  }
  const json& cites = array_field(j, "citations", "report");
  for (std::size_t i = 0; i < cites.size(); ++i) {
    const std::string w = idx("report.citations", i);
    r.citations.push_back({as_string(field(cites[i], "loc", w), sub(w, "loc")),
                           as_string(field(cites[i], "quote", w), sub(w, "quote"))});
  }
  if (j.contains("certificates")) {
    const json& c = j["certificates"];
    if (c.contains("lower") && !c["lower"].is_null()) r.lower_cert = certificate_from_json(c["lower"]);
    if (c.contains("upper") && !c["upper"].is_null()) r.upper_evidence = evidence_from_json(c["upper"]);
  }
  if (j.contains("sweep")) r.sweep = sweep_from_json(j["sweep"]);
  if (j.contains("notes")) {
    const json& notes = j["notes"];
    if (!notes.is_array()) fail("report.notes", "expected an array");
    for (std::size_t i = 0; i < notes.size(); ++i) r.notes.push_back(as_string(notes[i], idx("report.notes", i)));
  }
  return r;
}

json to_json(const FixtureSpec& f) {
  json out{{"name", f.name}, {"points", points_to_json(f.points)}};
  if (f.expected) out["expected"] = value_json(f.expected->exact, f.expected->lower, f.expected->upper);
  out["figure_ref"] = f.figure_ref;
  if (f.curve) out["curve"] = to_json(*f.curve);
  if (!f.trace.empty()) out["trace"] = f.trace;
  return out;
}

FixtureSpec fixture_from_json(const json& j) {
  FixtureSpec f;
  f.name = as_string(field(j, "name", "fixture"), "fixture.name");
  f.points = points_from_json(j);
  if (j.contains("expected")) {
    const json& e = j["expected"];
    if (e.contains("exact")) {
      f.expected = ExpectedValue::exactly(rational_from_json(e["exact"], "fixture.expected.exact"));
    } else {
      std::optional<Rational> hi;
      if (e.contains("upper") && !e["upper"].is_null()) hi = rational_from_json(e["upper"], "fixture.expected.upper");
      f.expected = ExpectedValue::between(rational_from_json(field(e, "lower", "fixture.expected"), "fixture.expected.lower"), hi);
    }
  }
  if (j.contains("figure_ref")) f.figure_ref = as_string(j["figure_ref"], "fixture.figure_ref");
  if (j.contains("curve")) f.curve = curve_from_json(j["curve"], "fixture.curve");
  if (j.contains("trace")) {
    for (std::size_t i = 0; i < j["trace"].size(); ++i) f.trace.push_back(as_string(j["trace"][i], idx("fixture.trace", i)));
  }
  return f;
}

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

}  // namespace wald::io
