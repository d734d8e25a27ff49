#include "torsion/elliptic_four.hpp"

#include "torsion/error.hpp"
#include "torsion/oracle.hpp"

#include <algorithm>

namespace torsion {

EllipticFourFamily build_family(const FieldElement& B, const FieldElement& B1) {
  const FieldSpec& spec = B.spec();
  if (spec.characteristic() == 2) fail(ErrorKind::CharTwo, "characteristic 2");
  if (B.is_zero() || B1.is_zero()) fail(ErrorKind::ZeroParameter, "B and B1 must be nonzero");
  if (B1 * B1 == spec.element(8) * B) fail(ErrorKind::Degenerate, "B1^2 - 8B = 0: f has a repeated root");
  EllipticFourFamily family;
  family.B = B;
  family.B1 = B1;
  family.f = Poly(spec, {spec.one(), B1, spec.element(2) * B}) * Poly(spec, {spec.one(), B1});
  family.Q0 = {spec.zero(), spec.one()};
  family.Q2 = {-B1.inv(), spec.zero()};
  if (!is_squarefree(family.f)) fail(ErrorKind::Degenerate, "f has a repeated root");
  return family;
}

VerificationReport check_order_structure(const EllipticFourFamily& family) {
  VerificationReport report;
  const Poly& f = family.f;
  const FieldSpec& spec = f.spec();
  auto o0 = elliptic_order(f, family.Q0, 8);
  auto o2 = elliptic_order(f, family.Q2, 8);
  report.oracle_order = o0;
  report.add("order(Q0) = 4", o0 == std::optional<int>(4), o0 ? std::to_string(*o0) : "exceeds 8");
  report.add("order(Q2) = 2", o2 == std::optional<int>(2), o2 ? std::to_string(*o2) : "exceeds 8");
  auto doubled = elliptic_multiply(f, EllipticPoint::affine(family.Q0), 2);
  report.add("2 Q0 = Q2", doubled == EllipticPoint::affine(family.Q2));
  // Tangent at Q0: 2(y - 1) - 2 B1 x = 0, through Q2.
  FieldElement slope = derivative(f)(spec.zero()) / spec.element(2);
  FieldElement on_tangent = spec.element(2) * (family.Q2.y - spec.one()) - spec.element(2) * family.B1 * family.Q2.x;
  report.add("tangent at Q0 passes through Q2", slope == family.B1 && on_tangent.is_zero());
  // The quadratic factor f / (B1 x + 1) at -1/B1 is 2B/B1^2.
  Poly cofactor = exact_div(f, Poly(spec, {spec.one(), family.B1}));
  report.add("quadratic factor at -1/B1 is 2B/B1^2",
             cofactor(family.Q2.x) == spec.element(2) * family.B / (family.B1 * family.B1) &&
                 !cofactor(family.Q2.x).is_zero());
  return report;
}

BivariatePoly::BivariatePoly(const FieldSpec& spec, std::vector<Poly> coeffs) : spec_(spec), coeffs_(std::move(coeffs)) {
  trim();
}

BivariatePoly BivariatePoly::from_x(const Poly& p) { return BivariatePoly(p.spec(), {p}); }

BivariatePoly BivariatePoly::y(const FieldSpec& spec) {
  return BivariatePoly(spec, {Poly(spec), Poly::constant(spec.one())});
}

void BivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement BivariatePoly::operator()(const FieldElement& x, const FieldElement& y) const {
  FieldElement acc = spec_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + (*it)(x);
  return acc;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  std::vector<Poly> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Poly(a.spec_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return BivariatePoly(a.spec_, std::move(c));
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
  return a + a.spec_.element(-1) * b;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return BivariatePoly(a.spec_);
  std::vector<Poly> c(a.coeffs_.size() + b.coeffs_.size() - 1, Poly(a.spec_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return BivariatePoly(a.spec_, std::move(c));
}

BivariatePoly operator*(const FieldElement& k, const BivariatePoly& a) {
  std::vector<Poly> c = a.coeffs_;
  for (auto& p : c) p *= k;
  return BivariatePoly(a.spec_, std::move(c));
}

BivariatePoly substitute_y(const BivariatePoly& p, const BivariatePoly& q) {
  BivariatePoly acc(q.spec());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + BivariatePoly::from_x(*it);
  return acc;
}

BivariatePoly kubert_equation(const FieldElement& b) {
  const FieldSpec& spec = b.spec();
  // y^2 + (x - b) y + (b x^2 - x^3)
  return BivariatePoly(spec, {Poly(spec, {spec.zero(), spec.zero(), b, -spec.one()}), Poly(spec, {-b, spec.one()}),
                              Poly::constant(spec.one())});
}

KubertCorrespondence from_kubert(const FieldElement& b) {
  const FieldSpec& spec = b.spec();
  if (spec.characteristic() == 2) fail(ErrorKind::CharTwo, "characteristic 2");
  if (b.is_zero() || (spec.one() + spec.element(16) * b).is_zero())
    fail(ErrorKind::DegenerateB, "b^4 (1 + 16 b) = 0");
  KubertCorrespondence out;
  out.family = build_family(spec.element(-2) / b, spec.element(-1) / b);

  BivariatePoly x = BivariatePoly::from_x(Poly::x(spec)), y = BivariatePoly::y(spec);
  BivariatePoly x_minus_b = BivariatePoly::from_x(Poly(spec, {-b, spec.one()}));
  // y2 = -2 (y + (x - b)/2) / b
  BivariatePoly Y2 = (-b.inv()) * (spec.element(2) * y + x_minus_b);
  out.to_family = {x, Y2};
  // Inverse: y = (-b Y2 - (x - b)) / 2
  out.from_family = {x, spec.element(2).inv() * ((-b) * y - x_minus_b)};

  BivariatePoly lhs = Y2 * Y2 - BivariatePoly::from_x(out.family.f);
  BivariatePoly rhs = (spec.element(4) / (b * b)) * kubert_equation(b);
  // from_family o to_family is the identity on (x, y).
  BivariatePoly back = substitute_y(out.from_family.Y, Y2);
  out.map_verified = lhs == rhs && back == y;
  return out;
}

KubertReduction to_kubert(const EllipticFourFamily& family) {
  const FieldSpec& spec = family.f.spec();
  const FieldElement a = spec.element(2) * family.B, c = family.B1;
  const FieldElement two = spec.element(2), four = spec.element(4);
  KubertReduction out;
  out.b = -family.B / (two * c * c);

  // Family side: multiply by 4(ac)^2 and put x1 = ac x, y1 = 2ac y.
  const FieldElement ac = a * c;
  out.chain_family = family.f.scale_variable(ac.inv()) * (four * ac * ac);

  // Kubert side: (y + (x-b)/2)^2 = x^3 - b x^2 + ((x-b)/2)^2, then times 4.
  const FieldElement& b = out.b;
  Poly half_xb = Poly(spec, {-b, spec.one()}) * two.inv();
  Poly completed = Poly(spec, {spec.zero(), spec.zero(), -b, spec.one()}) + half_xb * half_xb;
  Poly e1 = completed * four;
  // x2 = 4c^2 x, y2 = 8c^3 y.
  const FieldElement lambda = four * c * c, mu = spec.element(8) * c * c * c;
  out.chain_kubert = e1.scale_variable(lambda.inv()) * (mu * mu);

  out.closed_form = Poly(spec, {four * a * a * c * c, spec.element(8) * a * c * c, four * (a + c * c), four});
  return out;
}

std::optional<FieldElement> scaling_isomorphism(const EllipticFourFamily& from, const EllipticFourFamily& to) {
  FieldElement t = to.B1 / from.B1;
  if (from.f.scale_variable(t) == to.f) return t;
  return std::nullopt;
}

}  // namespace torsion
