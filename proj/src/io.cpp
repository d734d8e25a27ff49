#include "torsion/io.hpp"

#include "torsion/error.hpp"

#include <cctype>

namespace torsion {

namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorKind::SchemaViolation, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing key '") + key + "'");
  return *it;
}

int int_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer()) schema(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) schema(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

Json indices_to_json(const std::vector<std::size_t>& I) {
  Json out = Json::array();
  for (auto i : I) out.push_back(i);
  return out;
}

}  // namespace

Json field_to_json(const FieldSpec& spec) {
  if (spec.is_rationals()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Fp"}, {"p", spec.p()}};
}

FieldSpec field_from_json(const Json& j) {
  std::string kind = string_member(j, "kind");
  if (kind == "Q") return FieldSpec::rationals();
  if (kind != "Fp") schema("unknown field kind '" + kind + "'");
  const Json& p = member(j, "p");
  if (!p.is_number_integer()) schema("'p' must be an integer");
  auto value = p.get<std::int64_t>();
  if (value < 2 || !is_prime(value)) schema("p = " + std::to_string(value) + " is not prime");
  return FieldSpec::prime(value);
}

FieldSpec parse_field_arg(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0)
    digits = text.substr(3);
  else if (text.size() > 1 && text[0] == 'F')
    digits = text.substr(1);
  else
    schema("field must be Q, F<p> or Fp:<p>, got '" + text + "'");
  if (digits.empty() || digits.size() > 18) schema("bad prime in '" + text + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) schema("bad prime in '" + text + "'");
  return field_from_json(Json{{"kind", "Fp"}, {"p", std::stoll(digits)}});
}

Json scalar_to_json(const FieldElement& x) { return x.to_string(); }

FieldElement scalar_from_json(const FieldSpec& spec, const Json& j) {
  if (j.is_number_integer()) return spec.element(j.get<std::int64_t>());
  if (!j.is_string()) schema("scalar must be a string, got " + j.dump());
  try {
    return FieldElement::parse(spec, j.get<std::string>());
  } catch (const Error& e) {
    // e.g. "1/13" over F13
    if (e.kind() == ErrorKind::SchemaViolation) throw;
    schema(e.what());
  }
}

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(scalar_to_json(c));
  return out;
}

Poly poly_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_array()) schema("polynomial must be an array, got " + j.dump());
  std::vector<FieldElement> coeffs;
  for (const auto& c : j) coeffs.push_back(scalar_from_json(spec, c));
  return Poly(spec, std::move(coeffs));
}

Json point_to_json(const AffinePoint& P) { return Json{{"x", scalar_to_json(P.x)}, {"y", scalar_to_json(P.y)}}; }

AffinePoint point_from_json(const FieldSpec& spec, const Json& j) {
  return {scalar_from_json(spec, member(j, "x")), scalar_from_json(spec, member(j, "y"))};
}

Json curve_to_json(const SuperellipticCurve& curve) {
  return Json{{"d", curve.d()}, {"n", curve.n()}, {"field", field_to_json(curve.spec())}, {"f", poly_to_json(curve.f())}};
}

SuperellipticCurve curve_from_json(const Json& j) {
  FieldSpec spec = field_from_json(member(j, "field"));
  int d = int_member(j, "d");
  Poly f = poly_from_json(spec, member(j, "f"));
  if (j.contains("n")) {
    int n = int_member(j, "n");
    if (f.degree() != n) schema("'n' disagrees with deg f");
  }
  return SuperellipticCurve(d, std::move(f));
}

Json certificate_to_json(const TorsionCertificate& cert) {
  return Json{{"a", scalar_to_json(cert.a)},   {"B", scalar_to_json(cert.B)}, {"q", poly_to_json(cert.q)},
              {"v", poly_to_json(cert.v)},     {"f", poly_to_json(cert.f)},   {"m0", cert.m0},
              {"n", cert.n},                   {"d", cert.d},                 {"field", field_to_json(cert.spec())}};
}

TorsionCertificate certificate_from_json(const Json& j) {
  FieldSpec spec = field_from_json(member(j, "field"));
  TorsionCertificate cert;
  cert.n = int_member(j, "n");
  cert.d = int_member(j, "d");
  cert.m0 = int_member(j, "m0");
  cert.a = scalar_from_json(spec, member(j, "a"));
  cert.B = scalar_from_json(spec, member(j, "B"));
  cert.q = poly_from_json(spec, member(j, "q"));
  cert.v = poly_from_json(spec, member(j, "v"));
  cert.f = poly_from_json(spec, member(j, "f"));
  return cert;
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  Json out{{"passed", report.all_passed()}, {"checks", std::move(checks)}};
  out["oracle_order"] = report.oracle_order ? Json(*report.oracle_order) : Json(nullptr);
  return out;
}

Json normalized_to_json(const NormalizedCertificate& nc) {
  return Json{{"h", poly_to_json(nc.h)},
              {"w", poly_to_json(nc.w)},
              {"r", poly_to_json(nc.r)},
              {"Btilde", scalar_to_json(nc.Btilde)},
              {"n", nc.n},
              {"d", nc.d},
              {"certificate", certificate_to_json(nc.as_certificate())}};
}

Json elliptic_family_to_json(const EllipticFourFamily& family) {
  return Json{{"field", field_to_json(family.f.spec())},
              {"B", scalar_to_json(family.B)},
              {"B1", scalar_to_json(family.B1)},
              {"f", poly_to_json(family.f)},
              {"Q0", point_to_json(family.Q0)},
              {"Q2", point_to_json(family.Q2)}};
}

Json packet_family_to_json(const PacketFamily& fam) {
  return Json{{"field", field_to_json(fam.spec)},
              {"n", fam.n},
              {"ell0", fam.ell0},
              {"I", indices_to_json(fam.I)},
              {"case", to_string(fam.packet_case)},
              {"lambda", scalar_to_json(fam.lambda)},
              {"C", scalar_to_json(fam.C)},
              {"A1", scalar_to_json(fam.A1)},
              {"A2", scalar_to_json(fam.A2)},
              {"H_I", poly_to_json(fam.H_I)},
              {"H_co", poly_to_json(fam.H_co)},
              {"u_tilde", poly_to_json(fam.u_tilde)},
              {"v_tilde", poly_to_json(fam.v_tilde)},
              {"u", poly_to_json(fam.u)},
              {"v", poly_to_json(fam.v)},
              {"f", poly_to_json(fam.f)},
              {"twisted", fam.twisted}};
}

Json admissibility_to_json(const AdmissibilityVerdict& v) {
  return Json{{"n", v.n},
              {"d", v.d},
              {"verdict", to_string(v.status)},
              {"allowed", v.allowed},
              {"reasons", v.reasons},
              {"caveat", v.caveat}};
}

Json reachability_to_json(int n, int d, int m, const ReachabilityVerdict& v) {
  return Json{{"n", n},
              {"d", d},
              {"m", m},
              {"status", std::string(to_string(v.status))},
              {"rule", v.rule},
              {"sufficient_conditions", v.sufficient_conditions}};
}

Json RunManifest::to_json() const {
  Json params = Json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  Json res = Json::array();
  for (const auto& r : results) res.push_back(r);
  return Json{{"command", command},
              {"parameters", std::move(params)},
              {"results", std::move(res)},
              {"checks_passed", checks_passed},
              {"checks_failed", checks_failed}};
}

RunManifest RunManifest::from_json(const Json& j) {
  RunManifest m;
  m.command = string_member(j, "command");
  const Json& params = member(j, "parameters");
  if (!params.is_object()) schema("'parameters' must be an object");
  for (const auto& [k, v] : params.items()) {
    if (!v.is_string()) schema("parameter '" + k + "' must be a string");
    m.parameters[k] = v.get<std::string>();
  }
  const Json& res = member(j, "results");
  if (!res.is_array()) schema("'results' must be an array");
  for (const auto& r : res) m.results.push_back(r);
  m.checks_passed = int_member(j, "checks_passed");
  m.checks_failed = int_member(j, "checks_failed");
  return m;
}

}  // namespace torsion
