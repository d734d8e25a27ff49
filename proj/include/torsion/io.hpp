#pragma once

#include "torsion/certificate.hpp"
#include "torsion/curve.hpp"
#include "torsion/elliptic_four.hpp"
#include "torsion/field.hpp"
#include "torsion/poly.hpp"
#include "torsion/two_packet.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace torsion {

using Json = nlohmann::ordered_json;

// Scalars are strings ("3", "-1/2"), polynomials ascending arrays of scalars.
// Every reader raises SchemaViolation on malformed input.

Json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const Json& j);
// "Q", "F13" or "Fp:13".
FieldSpec parse_field_arg(const std::string& text);

Json scalar_to_json(const FieldElement& x);
FieldElement scalar_from_json(const FieldSpec& spec, const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldSpec& spec, const Json& j);

Json point_to_json(const AffinePoint& P);
AffinePoint point_from_json(const FieldSpec& spec, const Json& j);

// {"d","n","field","f"}
Json curve_to_json(const SuperellipticCurve& curve);
SuperellipticCurve curve_from_json(const Json& j);

// {"a","B","q","v","f","m0","n","d","field"}
Json certificate_to_json(const TorsionCertificate& cert);
// Reads the stored fields as given; verify_certificate judges them.
TorsionCertificate certificate_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
Json normalized_to_json(const NormalizedCertificate& nc);
Json elliptic_family_to_json(const EllipticFourFamily& family);
Json packet_family_to_json(const PacketFamily& family);
Json admissibility_to_json(const AdmissibilityVerdict& verdict);
Json reachability_to_json(int n, int d, int m, const ReachabilityVerdict& verdict);

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Json> results;
  int checks_passed = 0;
  int checks_failed = 0;

  Json to_json() const;
  static RunManifest from_json(const Json& j);
};

}  // namespace torsion
