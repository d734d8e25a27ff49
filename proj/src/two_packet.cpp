#include "torsion/two_packet.hpp"

#include "torsion/error.hpp"

#include <algorithm>
#include <numeric>

namespace torsion {

std::string to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Allowed: return "allowed";
    case Admissibility::Disallowed: return "disallowed";
    case Admissibility::Exempt: return "exempt";
  }
  return "?";
}

std::string to_string(PacketCase c) {
  switch (c) {
    case PacketCase::General: return "general";
    case PacketCase::C1_5: return "C1_5";
    case PacketCase::C1_6: return "C1_6";
  }
  return "?";
}

AdmissibilityVerdict two_packet_admissible(int n, int d) {
  TorsionParams t = torsion_params(n, d);
  AdmissibilityVerdict out;
  out.n = n;
  out.d = d;
  out.caveat = "necessary conditions proved for char 0 only";
  if (t.m0 == n + 1) {
    out.status = Admissibility::Exempt;
    out.caveat = "m0 = n + 1 is not covered by the conditions; (x+1)^m0 - x^m0 realizes two packets";
    return out;
  }
  auto& r = out.reasons;
  if (d > 5) r.push_back("(i)");
  if (n < 2 * d && !(d <= 4 && t.m0 == 2 * d && n <= 7)) r.push_back("(ii)");
  if (n == 7 && d != 3) r.push_back("(iii)");
  if (n == 5 || n == 6) r.push_back("(iv)");
  if (n == 4 && d != 3) r.push_back("(v)");
  if (n == 9 && d != 4) r.push_back("(vi)");
  if (t.slack < 0) r.push_back("slack");
  out.allowed = r.empty();
  out.status = out.allowed ? Admissibility::Allowed : Admissibility::Disallowed;
  return out;
}

FermatCheck fermat_identity_check(const Poly& f1, const Poly& f2, const Poly& f3, int d) {
  Poly s = f1.pow(d) + f2.pow(d) + f3.pow(d);
  FermatCheck out;
  out.is_constant = !s.is_zero() && s.is_constant();
  if (out.is_constant) out.value = s.coeff(0);
  return out;
}

Poly wronskian3(const Poly& g1, const Poly& g2, const Poly& g3) {
  const Poly a[3] = {g1, g2, g3};
  Poly d1[3], d2[3];
  for (int i = 0; i < 3; ++i) {
    d1[i] = derivative(a[i]);
    d2[i] = derivative(d1[i]);
  }
  // Expansion along the first row.
  return a[0] * (d1[1] * d2[2] - d1[2] * d2[1]) - a[1] * (d1[0] * d2[2] - d1[2] * d2[0]) +
         a[2] * (d1[0] * d2[1] - d1[1] * d2[0]);
}

WronskianAudit wronskian_degree_audit(const Poly& f1, const Poly& f2, const Poly& f3, int d, int ell0) {
  WronskianAudit out;
  out.d = d;
  out.ell0 = ell0;
  out.W = wronskian3(f1.pow(d), f2.pow(d), f3.pow(d));
  if (out.W.is_zero()) fail(ErrorKind::LinearlyDependent, "W(f1^d, f2^d, f3^d) = 0");
  out.degree = out.W.deg();
  out.lower = 3 * ell0 * (d - 2);
  out.upper = 2 * ell0 * d - 3;
  out.ell_d6 = ell0 * (d - 6) <= -3;
  return out;
}

HProduct build_H(const std::vector<FieldElement>& I, const FieldElement& C) {
  const FieldSpec& spec = C.spec();
  if (!spec.is_prime_field() && !I.empty()) fail(ErrorKind::UnsupportedField, "H_I is built over F_p");
  HProduct out{Poly::constant(spec.one()), {}};
  for (std::size_t i = 0; i < I.size(); ++i) {
    FieldElement slope = spec.one() - C * I[i];
    if (slope.is_zero()) out.degenerate.push_back(i);
    out.H *= Poly(spec, {spec.one(), slope});
  }
  return out;
}

std::vector<FieldElement> select_roots(const FieldSpec& spec, int n, const std::vector<std::size_t>& indices) {
  std::vector<FieldElement> mu;
  try {
    mu = roots_of_unity(spec, n + 1);
  } catch (const Error& e) {
    fail(ErrorKind::NoRootOfUnityStructure, "mu_" + std::to_string(n + 1) + " is not in " + spec.to_string());
  }
  std::vector<bool> seen(mu.size(), false);
  std::vector<FieldElement> out;
  for (std::size_t i : indices) {
    if (i >= mu.size() || seen[i]) fail(ErrorKind::BadParameters, "I must list distinct indices below n + 1");
    seen[i] = true;
    out.push_back(mu[i]);
  }
  return out;
}

std::vector<std::size_t> complement_indices(int n, const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n + 1); ++i)
    if (std::find(indices.begin(), indices.end(), i) == indices.end()) out.push_back(i);
  return out;
}

bool PacketFamily::identity_holds() const {
  Poly x1 = Poly::from_ints(spec, {1, 1});
  Poly lhs = Poly::monomial(A1, static_cast<std::size_t>(n + 1)) - u * u;
  Poly rhs = x1.pow(n + 1) * A2 - v * v;
  return lhs == f && rhs == f;
}

bool PacketFamily::factorization_holds() const {
  Poly x1 = Poly::from_ints(spec, {1, 1});
  Poly full = x1.pow(n + 1) - Poly::monomial(C.pow(n + 1), static_cast<std::size_t>(n + 1));
  FieldElement c = C.pow(ell0);
  return full == H_I * H_co && (v_tilde + u_tilde * c) * (v_tilde - u_tilde * c) == full;
}

namespace {

int packet_ell0(const FieldSpec& spec, int n, const std::vector<std::size_t>& I) {
  if (!spec.is_prime_field()) fail(ErrorKind::UnsupportedField, "two-packet families are built over F_p");
  if (spec.characteristic() == 2) fail(ErrorKind::BadParameters, "p must be odd");
  if (n < 3 || n % 2 == 0) fail(ErrorKind::BadParameters, "n must be odd and at least 3");
  if (spec.char_divides(n + 1)) fail(ErrorKind::BadParameters, "p divides n + 1");
  int ell0 = (n + 1) / 2;
  if (I.size() != static_cast<std::size_t>(ell0)) fail(ErrorKind::BadParameters, "|I| must be ell0");
  return ell0;
}

void fill_H(PacketFamily& fam) {
  auto I = select_roots(fam.spec, fam.n, fam.I);
  auto co = select_roots(fam.spec, fam.n, complement_indices(fam.n, fam.I));
  fam.H_I = build_H(I, fam.C).H;
  fam.H_co = build_H(co, fam.C).H;
}

// Shared tail of both builders.
void validate(const PacketFamily& fam) {
  if (!fam.identity_holds()) fail(ErrorKind::NotSquarefree, "the two representations of f disagree");
  if (fam.f.is_zero() || fam.f.deg() != fam.n)
    fail(ErrorKind::WrongDegree, "deg f = " + std::to_string(fam.f.is_zero() ? -1 : fam.f.deg()) +
                                     ", leading coefficient of u~ squared is not 1");
  if (!is_squarefree(fam.f)) fail(ErrorKind::NotSquarefree, "f = " + fam.f.to_string() + " (bad lambda)");
}

}  // namespace

PacketFamily draft_two_packet_general(const FieldSpec& spec, int n, const std::vector<std::size_t>& I,
                                      const FieldElement& lambda, const FieldElement& A1, const FieldElement& A2) {
  PacketFamily fam;
  fam.ell0 = packet_ell0(spec, n, I);
  if (lambda.is_zero() || A1.is_zero() || A2.is_zero()) fail(ErrorKind::ZeroParameter, "lambda, A1, A2 nonzero");
  if (A1 == A2) fail(ErrorKind::BadParameters, "A1 = A2 is the equal case");
  auto C = nth_root(A1 / A2, n + 1);
  if (!C) fail(ErrorKind::NoRootOfUnityStructure, "A1/A2 has no (n+1)-th root");
  fam.spec = spec;
  fam.n = n;
  fam.I = I;
  fam.packet_case = PacketCase::General;
  fam.lambda = lambda;
  fam.C = *C;
  fill_H(fam);

  const FieldElement half = spec.element(2).inv(), li = lambda.inv();
  const FieldElement cl = fam.C.pow(fam.ell0);
  fam.v_tilde = (fam.H_I * lambda + fam.H_co * li) * half;
  fam.u_tilde = (fam.H_I * lambda - fam.H_co * li) * (half / cl);

  auto B1 = nth_root(A1, 2), B2 = nth_root(A2, 2);
  if (B1 && B2) {
    fam.A1 = A1;
    fam.A2 = A2;
    fam.u = fam.u_tilde * *B1;
    fam.v = fam.v_tilde * *B2;
  } else {
    fam.twisted = true;
    fam.A1 = spec.one();
    fam.A2 = A2 / A1;
    fam.u = fam.u_tilde;
    fam.v = fam.v_tilde * cl.inv();
  }
  fam.f = Poly::monomial(fam.A1, static_cast<std::size_t>(n + 1)) - fam.u * fam.u;
  return fam;
}

PacketFamily draft_two_packet_equal(const FieldSpec& spec, int n, const std::vector<std::size_t>& I,
                                    const FieldElement& lambda, PacketCase packet_case) {
  PacketFamily fam;
  fam.ell0 = packet_ell0(spec, n, I);
  if (packet_case == PacketCase::General) fail(ErrorKind::BadParameters, "equal case needs C1_5 or C1_6");
  if (lambda.is_zero()) fail(ErrorKind::ZeroParameter, "lambda = 0");
  if (lambda.is_one() || (-lambda).is_one()) fail(ErrorKind::ExcludedLambda, "lambda = +-1 is excluded");
  fam.spec = spec;
  fam.n = n;
  fam.I = I;
  fam.packet_case = packet_case;
  fam.lambda = lambda;
  fam.C = spec.one();
  fam.A1 = spec.one();
  fam.A2 = spec.one();
  fill_H(fam);

  const FieldElement half = spec.element(2).inv(), li = lambda.inv();
  fam.v_tilde = (fam.H_I * lambda + fam.H_co * li) * half;
  fam.u_tilde = (fam.H_I * lambda - fam.H_co * li) * half;
  if (packet_case == PacketCase::C1_5) fam.u_tilde = -fam.u_tilde;
  fam.u = fam.u_tilde;
  fam.v = fam.v_tilde;
  fam.f = Poly::monomial(spec.one(), static_cast<std::size_t>(n + 1)) - fam.u * fam.u;
  return fam;
}

PacketFamily build_two_packet_general(const FieldSpec& spec, int n, const std::vector<std::size_t>& I,
                                      const FieldElement& lambda, const FieldElement& A1, const FieldElement& A2) {
  PacketFamily fam = draft_two_packet_general(spec, n, I, lambda, A1, A2);
  validate(fam);
  return fam;
}

PacketFamily build_two_packet_equal(const FieldSpec& spec, int n, const std::vector<std::size_t>& I,
                                    const FieldElement& lambda, PacketCase packet_case) {
  PacketFamily fam = draft_two_packet_equal(spec, n, I, lambda, packet_case);
  validate(fam);
  return fam;
}

std::vector<AffinePoint> packet_points(const PacketFamily& family) {
  SuperellipticCurve curve(2, family.f);
  auto out = curve.points_above(family.spec.zero());
  auto minus = curve.points_above(-family.spec.one());
  out.insert(out.end(), minus.begin(), minus.end());
  return out;
}

std::optional<FermatTriple> fermat_triple(const PacketFamily& family) {
  const FieldSpec& spec = family.spec;
  auto s = nth_root(family.A2, 2);
  auto eta = nth_root(-spec.one(), 2);
  if (!s || !eta) return std::nullopt;
  // t^ell0 g(1/t) for deg g <= ell0.
  auto reverse = [&](const Poly& g) {
    std::vector<FieldElement> c(static_cast<std::size_t>(family.ell0) + 1, spec.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[c.size() - 1 - i] = g.coeff(i);
    return Poly(spec, c);
  };
  return FermatTriple{Poly::from_ints(spec, {1, 1}).pow(family.ell0) * *s, reverse(family.u),
                      reverse(family.v) * *eta};
}

M0PlusOneExample example_m0_equals_nplus1(int n, int d, const FieldSpec& spec) {
  TorsionParams t = torsion_params(n, d);
  if (t.m0 != n + 1) fail(ErrorKind::BadParameters, "needs m0 = n + 1, got m0 = " + std::to_string(t.m0));
  if (spec.char_divides(t.m0)) fail(ErrorKind::CharDividesM0, "characteristic divides m0");
  Poly x1 = Poly::from_ints(spec, {1, 1});
  Poly f = x1.pow(t.m0) - Poly::x(spec).pow(t.m0);
  M0PlusOneExample out{SuperellipticCurve(d, f), -spec.one(), spec.one(), Poly::x(spec).pow(t.ell0), {}, {}, {}, {}};
  out.gamma = nth_root(-spec.one(), d);
  if (out.gamma) out.u = x1.pow(t.ell0) * *out.gamma;
  out.abscissas = {spec.zero(), -spec.one()};
  for (const auto& a : out.abscissas) {
    auto pts = out.curve.points_above(a);
    out.points.insert(out.points.end(), pts.begin(), pts.end());
  }
  return out;
}

Poly finite_polynomial(const FieldSpec& spec, int n, const std::vector<std::size_t>& I, const FieldElement& C,
                       const FieldElement& lambda) {
  int ell0 = packet_ell0(spec, n, I);
  if (lambda.is_zero()) fail(ErrorKind::ZeroParameter, "lambda = 0");
  Poly HI = build_H(select_roots(spec, n, I), C).H;
  Poly Hc = build_H(select_roots(spec, n, complement_indices(n, I)), C).H;
  Poly u = (HI * lambda - Hc * lambda.inv()) * (spec.element(2) * C.pow(ell0)).inv();
  return Poly::monomial(spec.one(), static_cast<std::size_t>(n + 1)) - u * u;
}

BadLambdaReport bad_lambda_set(const FieldSpec& spec, int n, const std::vector<std::size_t>& I, const FieldElement& C,
                               bool as_printed) {
  int ell0 = packet_ell0(spec, n, I);
  if (spec.char_divides(ell0)) fail(ErrorKind::BadParameters, "p divides ell0");
  if (C.is_zero()) fail(ErrorKind::ZeroParameter, "C = 0");
  Poly HI = build_H(select_roots(spec, n, I), C).H;
  Poly Hc = build_H(select_roots(spec, n, complement_indices(n, I)), C).H;
  const FieldElement l = spec.element(ell0);
  const Poly x = Poly::x(spec);

  BadLambdaReport out;
  out.L_I = HI * l - x * derivative(HI);
  out.L_co = Hc * l - x * derivative(Hc);
  if (out.L_I.is_zero() || out.L_co.is_zero()) fail(ErrorKind::Lem1Violation, "ell0 H - x H' vanishes");
  const FieldElement k = as_printed ? C.pow(ell0) : spec.element(2) * C.pow(ell0);
  Poly cross = derivative(HI) * Hc - derivative(Hc) * HI;
  // Squaring (mult6) and clearing L_I gives x^2 cross^2 on the right, so the
  // corrected power of x is n - 1.
  out.mult10 = out.L_co * out.L_I * x.pow(as_printed ? n : n - 1) * (l * l * k * k) - cross * cross * (l * l);

  std::vector<FieldElement> x0;
  out.mult10_vanishes = out.mult10.is_zero();
  if (out.mult10_vanishes) {
    // Happens for I a coset of mu_ell0; every x0 in F_p is then a candidate.
    for (std::int64_t v = 0; v < spec.characteristic(); ++v) x0.push_back(spec.element(v));
  }
  for (const Poly* p : {&out.mult10, &out.L_I, &out.L_co}) {
    if (p->is_zero()) continue;
    for (auto& r : roots_in_field(*p)) x0.push_back(r);
  }
  std::sort(x0.begin(), x0.end());
  x0.erase(std::unique(x0.begin(), x0.end()), x0.end());
  out.x0 = x0;

  std::vector<FieldElement> cand{spec.one(), -spec.one()};
  for (const auto& r : x0) {
    // ell0 H_I(x0) lambda^2 - ell0 k x0^ell0 lambda - ell0 H_co(x0) = 0
    Poly quad(spec, {-l * Hc(r), -l * k * r.pow(ell0), l * HI(r)});
    if (quad.is_zero()) {
      out.unbounded = true;
      continue;
    }
    for (auto& lam : roots_in_field(quad)) {
      if (lam.is_zero()) continue;
      cand.push_back(lam);
      cand.push_back(-lam);
    }
  }
  if (out.unbounded)
    for (std::int64_t k = 1; k < spec.characteristic(); ++k) cand.push_back(spec.element(k));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  out.candidates = cand;
  return out;
}

std::vector<FieldElement> confirmed_bad_lambdas(const FieldSpec& spec, int n, const std::vector<std::size_t>& I,
                                                const FieldElement& C) {
  std::vector<FieldElement> out;
  for (std::int64_t k = 1; k < spec.characteristic(); ++k) {
    FieldElement lam = spec.element(k);
    Poly g = finite_polynomial(spec, n, I, C, lam);
    if (g.is_zero() || !is_squarefree(g)) out.push_back(lam);
  }
  return out;
}

ShiftResult shift_points_to_0_minus1(const SuperellipticCurve& curve, const AffinePoint& P, const AffinePoint& Q) {
  if (!curve.contains(P.x, P.y) || !curve.contains(Q.x, Q.y)) fail(ErrorKind::NotOnCurve, "P and Q must lie on the curve");
  if (P.x == Q.x) fail(ErrorKind::SameAbscissa, "x(P) = x(Q)");
  const FieldSpec& spec = curve.spec();
  const FieldElement lambda = P.x - Q.x, mu = P.x;
  const int n = curve.n(), d = curve.d();
  Poly g = curve.f().compose(Poly(spec, {mu, lambda})) * lambda.pow(-n);
  ShiftResult out{SuperellipticCurve(d, g), lambda, mu, nth_root(lambda.pow(n), d), false, {}, {}};
  if (!out.y_scale) {
    out.needs_extension = true;
    return out;
  }
  FieldElement s = out.y_scale->inv();
  out.P_image = AffinePoint{spec.zero(), P.y * s};
  out.Q_image = AffinePoint{-spec.one(), Q.y * s};
  return out;
}

}  // namespace torsion
