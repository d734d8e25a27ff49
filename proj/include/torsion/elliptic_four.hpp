#pragma once

#include "torsion/certificate.hpp"
#include "torsion/curve.hpp"
#include "torsion/poly.hpp"

#include <optional>
#include <vector>

namespace torsion {

// y^2 = (2B x^2 + B1 x + 1)(B1 x + 1) with Q0 = (0, 1) of order 4 and
// Q2 = (-1/B1, 0) = 2 Q0.
struct EllipticFourFamily {
  FieldElement B;
  FieldElement B1;
  Poly f;
  AffinePoint Q0;
  AffinePoint Q2;
};

// Errors: CharTwo, ZeroParameter, Degenerate (B1^2 = 8B).
EllipticFourFamily build_family(const FieldElement& B, const FieldElement& B1);

VerificationReport check_order_structure(const EllipticFourFamily& family);

// Polynomial in y with coefficients in K[x]; coefficient j multiplies y^j.
class BivariatePoly {
 public:
  BivariatePoly() : spec_(FieldSpec::rationals()) {}
  explicit BivariatePoly(const FieldSpec& spec) : spec_(spec) {}
  BivariatePoly(const FieldSpec& spec, std::vector<Poly> coeffs);
  static BivariatePoly from_x(const Poly& p);
  static BivariatePoly y(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  FieldElement operator()(const FieldElement& x, const FieldElement& y) const;

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const FieldElement& c, const BivariatePoly& a);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  FieldSpec spec_;
  std::vector<Poly> coeffs_;
};

// p(x, q(x, y))
BivariatePoly substitute_y(const BivariatePoly& p, const BivariatePoly& q);

// y^2 + xy - by - x^3 + bx^2, the Kubert curve E(b, 0) as F(x, y) = 0.
BivariatePoly kubert_equation(const FieldElement& b);

// (x, y) -> (X(x, y), Y(x, y)), polynomial in both coordinates.
struct PointMap {
  BivariatePoly X;
  BivariatePoly Y;
  AffinePoint apply(const AffinePoint& p) const { return {X(p.x, p.y), Y(p.x, p.y)}; }
};

struct KubertCorrespondence {
  EllipticFourFamily family;
  PointMap to_family;
  PointMap from_family;
  // Y^2 - f(X) = (4/b^2) * kubert_equation, checked as polynomials.
  bool map_verified = false;
};

// B = -2/b, B1 = -1/b. Errors: CharTwo, DegenerateB (b = 0 or 1 + 16b = 0).
KubertCorrespondence from_kubert(const FieldElement& b);

// The reduced cubic 4x^3 + 4(a+c^2)x^2 + 8ac^2 x + 4a^2c^2 reached from both
// sides, with a = 2B and c = B1.
struct KubertReduction {
  FieldElement b;
  Poly chain_family;  // 4(ac)^2 f(x/(ac))
  Poly chain_kubert;  // from E(b,0) by completing the square and rescaling
  Poly closed_form;
  bool agree() const { return chain_family == chain_kubert && chain_kubert == closed_form; }
};

// b = -B/(2 B1^2), with both reduction chains computed symbolically.
KubertReduction to_kubert(const EllipticFourFamily& family);

// t with g.f(x) = f.f(t x), i.e. (B', B1') = (B t^2, B1 t); nullopt otherwise.
std::optional<FieldElement> scaling_isomorphism(const EllipticFourFamily& from, const EllipticFourFamily& to);

}  // namespace torsion
