#pragma once

#include "torsion/curve.hpp"
#include "torsion/field.hpp"
#include "torsion/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torsion {

// f = -B^d (x-a)^m0 + v^d with v = B (x-a)^ell0 + q. Then
// div(v - y) = m0 (P) - m0 (O) for P = (a, v(a)).
struct TorsionCertificate {
  int n = 0;
  int d = 0;
  int m0 = 0;
  FieldElement a;
  FieldElement B;
  Poly q;
  Poly v;
  Poly f;

  const FieldSpec& spec() const { return f.spec(); }
  AffinePoint point() const { return {a, v(a)}; }
  friend bool operator==(const TorsionCertificate&, const TorsionCertificate&) = default;
};

// Errors: NegativeSlack, WrongQDegree (including q = 0), QVanishesAtA,
// ZeroParameter (B = 0), NotSquarefree.
TorsionCertificate build_certificate(int n, int d, const FieldElement& a, const FieldElement& B, const Poly& q);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::optional<int> oracle_order;

  bool all_passed() const;
  void add(std::string name, bool passed, std::string detail = {});
};

struct VerifyOptions {
  bool run_oracle = true;
  // <= 0 selects 2*m0.
  int max_k = 0;
};

// Never throws on bad data; failures become report entries.
VerificationReport verify_certificate(const TorsionCertificate& cert, const VerifyOptions& options = {});

struct NormalizedCertificate {
  Poly h;
  Poly w;
  Poly r;
  FieldElement Btilde;
  int n = 0;
  int d = 0;

  // The same data as a certificate centred at a = 0 with point (0, 1).
  TorsionCertificate as_certificate() const;
};

// h(x) = v(a)^-d f(x+a), w(x) = v(a)^-1 v(x+a), Btilde = B / v(a).
NormalizedCertificate normalize_certificate(const TorsionCertificate& cert);

// f0 = -x^m0 + (x^ell0 + 1)^d. Errors: SlackNotZero, CharDividesEll0,
// CharDividesD.
TorsionCertificate family_equal0(int n, int d, const FieldSpec& spec);

// B0 with f(x) = f0(B0 x) when an ell0-th root of B exists in the base field.
// Errors: SlackNotZero, NotNormalized.
std::optional<FieldElement> equal0_reduce(const TorsionCertificate& cert);

struct Equal1Family {
  TorsionCertificate certificate;
  // (-1/B1, 0), a point of order d.
  AffinePoint order_d_point;
};

// f = -B^d x^m0 + (B x^ell0 + B1 x + 1)^d. Errors: SlackNotOne,
// ZeroParameter, NotSquarefree.
Equal1Family family_equal1(int n, int d, const FieldElement& B, const FieldElement& B1);

}  // namespace torsion
