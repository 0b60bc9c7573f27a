#include "tautchi/json_io.hpp"

#include "tautchi/errors.hpp"

namespace tautchi::io {

ordered_json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw UsageError("rational: expected integer or \"num/den\" string");
}

ordered_json to_json(const UVPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [k, c] : p.terms()) {
    ordered_json t;
    t["u"] = k.first;
    t["v"] = k.second;
    t["value"] = c.str();
    terms.push_back(std::move(t));
  }
  return terms;
}

UVPoly uvpoly_from_json(const ordered_json& j) {
  // Accept either the term-list form or a bare number/string constant.
  if (j.is_number_integer() || j.is_string()) return UVPoly(rational_from_json(j));
  if (!j.is_array()) throw UsageError("uvpoly: expected a term array");
  UVPoly p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("u") || !t.contains("v") || !t.contains("value"))
      throw UsageError("uvpoly: terms need u, v, value");
    p += UVPoly::monomial(t["u"].get<int>(), t["v"].get<int>(), rational_from_json(t["value"]));
  }
  return p;
}

ordered_json to_json(const QSeries& s) {
  ordered_json coeffs = ordered_json::array();
  for (int n = 0; n <= s.order(); ++n)
    coeffs.push_back(ordered_json::array({n, to_json(s.coeff(n))}));
  ordered_json j;
  j["order"] = s.order();
  j["coefficients"] = std::move(coeffs);
  return j;
}

QSeries qseries_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coefficients"))
    throw UsageError("qseries: expected {order, coefficients}");
  QSeries s(j["order"].get<int>());
  for (const auto& pair : j["coefficients"]) {
    if (!pair.is_array() || pair.size() != 2) throw UsageError("qseries: bad coefficient pair");
    const int n = pair[0].get<int>();
    if (n < 0 || n > s.order()) throw UsageError("qseries: coefficient index out of range");
    s.set_coeff(n, uvpoly_from_json(pair[1]));
  }
  return s;
}

ordered_json coeffseq_to_json(const CoeffSeq& c) {
  ordered_json j = ordered_json::array();
  for (const UVPoly& p : c) j.push_back(to_json(p));
  return j;
}

CoeffSeq coeffseq_from_json(const ordered_json& j) {
  if (!j.is_array()) throw UsageError("coeffseq: expected an array");
  CoeffSeq c;
  for (const auto& p : j) c.push_back(uvpoly_from_json(p));
  return c;
}

ordered_json to_json(const toric::ToricSurface& S) {
  ordered_json j;
  switch (S.kind()) {
    case toric::ToricSurface::Kind::P2: j["type"] = "p2"; return j;
    case toric::ToricSurface::Kind::P1xP1: j["type"] = "p1xp1"; return j;
    case toric::ToricSurface::Kind::Hirzebruch:
      j["type"] = "fe";
      j["e"] = S.hirzebruch_e();
      return j;
    case toric::ToricSurface::Kind::Fan: break;
  }
  j["type"] = "fan";
  ordered_json rays = ordered_json::array();
  for (const toric::Vec2& v : S.rays()) rays.push_back(ordered_json::array({v[0], v[1]}));
  j["rays"] = std::move(rays);
  return j;
}

toric::ToricSurface surface_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("type")) throw UsageError("surface: expected {type, ...}");
  const std::string type = j["type"].get<std::string>();
  if (type == "p2") return toric::ToricSurface::p2();
  if (type == "p1xp1") return toric::ToricSurface::p1xp1();
  if (type == "fe") {
    if (!j.contains("e")) throw UsageError("surface: fe needs e");
    return toric::ToricSurface::hirzebruch(j["e"].get<int>());
  }
  if (type == "fan") {
    if (!j.contains("rays")) throw UsageError("surface: fan needs rays");
    std::vector<toric::Vec2> rays;
    for (const auto& r : j["rays"]) {
      if (!r.is_array() || r.size() != 2) throw UsageError("surface: rays are [x, y] pairs");
      rays.push_back({r[0].get<int>(), r[1].get<int>()});
    }
    return toric::ToricSurface(std::move(rays));
  }
  throw UsageError("surface: unknown type '" + type + "'");
}

ordered_json to_json(const toric::ToricLineBundle& b) {
  ordered_json j;
  j["ray_coeffs"] = b.ray_coeffs;
  return j;
}

toric::ToricLineBundle bundle_from_json(const ordered_json& j) {
  if (j.is_array()) return {j.get<std::vector<int>>()};
  if (j.is_object() && j.contains("ray_coeffs"))
    return {j["ray_coeffs"].get<std::vector<int>>()};
  throw UsageError("bundle: expected {ray_coeffs: [...]} or a plain array");
}

ordered_json to_json(const toric::ProjProduct& X) {
  ordered_json j;
  j["type"] = "proj_product";
  j["lambda"] = X.lambda;
  return j;
}

ordered_json to_json(const toric::ProjBundle& b) {
  ordered_json j;
  j["m"] = b.m;
  return j;
}

ordered_json to_json(const toric::MarkedSurface& m) {
  ordered_json j;
  j["space"] = to_json(m.S);
  j["K"] = to_json(m.K);
  j["L"] = to_json(m.L);
  return j;
}

ordered_json to_json(const toric::DegenerationScenario& s) {
  ordered_json j;
  j["X_xi"] = to_json(s.X);
  j["Y1"] = to_json(s.Y1);
  j["Y2"] = to_json(s.Y2);
  j["P_D"] = to_json(s.PD);
  j["provenance"] = s.provenance;
  return j;
}

ordered_json to_json(const toric::GeneratorTriple& t) {
  ordered_json j;
  j["space"] = to_json(t.space);
  j["K"] = to_json(t.K);
  j["L"] = to_json(t.L);
  return j;
}

ordered_json to_json(const verify::VerdictReport& r, bool include_timing) {
  ordered_json j;
  j["subject"] = r.subject;
  j["order"] = r.order;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["residual"] = to_json(r.residual);
  j["pass"] = r.pass;
  if (include_timing) j["timing_ms"] = r.timing_ms;
  return j;
}

} // namespace tautchi::io
