#include "torsion/certificate.hpp"

#include "torsion/error.hpp"
#include "torsion/oracle.hpp"

namespace torsion {

namespace {

// (x - a)^k
Poly linear_power(const FieldElement& a, int k) {
  const FieldSpec& spec = a.spec();
  return Poly(spec, {-a, spec.one()}).pow(k);
}

}  // namespace

TorsionCertificate build_certificate(int n, int d, const FieldElement& a, const FieldElement& B, const Poly& q) {
  TorsionParams t = torsion_params(n, d);
  if (t.slack < 0)
    fail(ErrorKind::NegativeSlack, "n - m0 + ell0 = " + std::to_string(t.slack) + " < 0: no order-m0 points");
  if (B.is_zero()) fail(ErrorKind::ZeroParameter, "B = 0");
  if (q.is_zero() || q.deg() != t.slack)
    fail(ErrorKind::WrongQDegree, "deg q must equal n - m0 + ell0 = " + std::to_string(t.slack));
  if (q(a).is_zero()) fail(ErrorKind::QVanishesAtA, "q(a) = 0");

  TorsionCertificate cert;
  cert.n = n;
  cert.d = d;
  cert.m0 = t.m0;
  cert.a = a;
  cert.B = B;
  cert.q = q;
  cert.v = B * linear_power(a, t.ell0) + q;
  cert.f = cert.v.pow(d) - B.pow(d) * linear_power(a, t.m0);
  if (cert.spec().char_divides(d)) fail(ErrorKind::CharDividesD, "characteristic divides d");
  if (cert.f.is_zero() || cert.f.deg() != n || !is_squarefree(cert.f))
    fail(ErrorKind::NotSquarefree, "f = " + cert.f.to_string() + " is not squarefree of degree " + std::to_string(n));
  return cert;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void VerificationReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

VerificationReport verify_certificate(const TorsionCertificate& cert, const VerifyOptions& options) {
  VerificationReport report;
  TorsionParams t;
  try {
    t = torsion_params(cert.n, cert.d);
  } catch (const Error& e) {
    report.add("parameters", false, e.what());
    return report;
  }
  report.add("parameters", t.m0 == cert.m0 && t.slack >= 0,
             "m0 = " + std::to_string(t.m0) + ", slack = " + std::to_string(t.slack));

  const FieldSpec& spec = cert.spec();
  bool fields_ok = cert.a.spec() == spec && cert.B.spec() == spec && cert.q.spec() == spec && cert.v.spec() == spec;
  report.add("field", fields_ok, spec.to_string());
  if (!fields_ok) return report;

  const Poly xa_l0 = linear_power(cert.a, t.ell0), xa_m0 = linear_power(cert.a, t.m0);
  report.add("v = B (x-a)^ell0 + q", cert.v == cert.B * xa_l0 + cert.q);
  report.add("q", !cert.B.is_zero() && !cert.q.is_zero() && cert.q.deg() == t.slack && !cert.q(cert.a).is_zero(),
             "deg q = slack, q(a) != 0, B != 0");

  bool curve_ok = false;
  try {
    SuperellipticCurve curve(cert.d, cert.f);
    curve_ok = true;
  } catch (const Error& e) {
    report.add("curve", false, e.what());
  }
  if (curve_ok) report.add("curve", true, "f squarefree of degree n");

  report.add("identity f + B^d (x-a)^m0 = v^d", cert.f + cert.B.pow(cert.d) * xa_m0 == cert.v.pow(cert.d));

  // N(v - y) = prod over mu_d of (v - zeta y) = v^d - f. Its zeros lie above
  // x = a only, where v - y vanishes at P and not at the other points of the
  // orbit since v(a) != 0.
  Poly norm = cert.v.pow(cert.d) - cert.f;
  Poly shifted = norm.shift(cert.a);
  bool concentrated = !shifted.is_zero() && shifted.deg() == t.m0;
  for (int i = 0; concentrated && i < t.m0; ++i) concentrated = shifted.coeff(static_cast<std::size_t>(i)).is_zero();
  report.add("norm v^d - f = c (x-a)^m0", concentrated && !cert.v(cert.a).is_zero());

  // ord_O(x) = -d, ord_O(y) = -n, so ord_O(v - y) = -d deg v = -m0 when
  // d deg v > n.
  bool pole_ok = !cert.v.is_zero() && cert.d * cert.v.deg() == t.m0 && t.m0 > cert.n;
  report.add("pole order at O is m0", pole_ok,
             "d deg v = " + std::to_string(cert.v.is_zero() ? 0 : cert.d * cert.v.deg()));

  if (options.run_oracle) {
    if (!curve_ok || cert.v(cert.a).is_zero()) {
      report.add("oracle order = m0", false, "curve or point invalid");
    } else {
      try {
        SuperellipticCurve curve(cert.d, cert.f);
        int max_k = options.max_k > 0 ? options.max_k : 2 * t.m0;
        report.oracle_order = order_of_class(curve, cert.point(), max_k);
        bool exact = report.oracle_order && *report.oracle_order == t.m0;
        report.add("oracle order = m0", exact,
                   report.oracle_order ? "order " + std::to_string(*report.oracle_order) : "exceeds max");
      } catch (const Error& e) {
        report.add("oracle order = m0", false, e.what());
      }
    }
  }
  return report;
}

TorsionCertificate NormalizedCertificate::as_certificate() const {
  const FieldSpec& spec = h.spec();
  TorsionCertificate cert;
  cert.n = n;
  cert.d = d;
  cert.m0 = torsion_params(n, d).m0;
  cert.a = spec.zero();
  cert.B = Btilde;
  cert.q = r;
  cert.v = w;
  cert.f = h;
  return cert;
}

NormalizedCertificate normalize_certificate(const TorsionCertificate& cert) {
  TorsionParams t = torsion_params(cert.n, cert.d);
  FieldElement va = cert.v(cert.a);
  if (va.is_zero()) fail(ErrorKind::BadParameters, "v(a) = 0");
  NormalizedCertificate out;
  out.n = cert.n;
  out.d = cert.d;
  out.h = cert.f.shift(cert.a) * va.pow(-cert.d);
  out.w = cert.v.shift(cert.a) * va.inv();
  out.Btilde = cert.B / va;
  out.r = out.w - Poly::monomial(out.Btilde, static_cast<std::size_t>(t.ell0));
  return out;
}

TorsionCertificate family_equal0(int n, int d, const FieldSpec& spec) {
  TorsionParams t = torsion_params(n, d);
  if (t.slack != 0) fail(ErrorKind::SlackNotZero, "slack = " + std::to_string(t.slack));
  if (spec.char_divides(d)) fail(ErrorKind::CharDividesD, "characteristic divides d");
  if (spec.char_divides(t.ell0))
    fail(ErrorKind::CharDividesEll0, "characteristic divides ell0 = " + std::to_string(t.ell0));

  // f0(x) = F0(x^ell0) with F0(X) = (X+1)^d - X^d of degree d-1.
  Poly F0 = Poly::from_ints(spec, {1, 1}).pow(d) - Poly::x(spec).pow(d);
  if (F0.deg() != d - 1 || !is_squarefree(F0))
    fail(ErrorKind::NotSquarefree, "(X+1)^d - X^d has a repeated root");
  if (F0(spec.zero()).is_zero()) fail(ErrorKind::NotSquarefree, "F0(0) = 0");
  return build_certificate(n, d, spec.zero(), spec.one(), Poly::constant(spec.one()));
}

std::optional<FieldElement> equal0_reduce(const TorsionCertificate& cert) {
  TorsionParams t = torsion_params(cert.n, cert.d);
  if (t.slack != 0) fail(ErrorKind::SlackNotZero, "slack = " + std::to_string(t.slack));
  if (!cert.a.is_zero() || !cert.v(cert.a).is_one()) fail(ErrorKind::NotNormalized, "need a = 0 and v(0) = 1");
  auto B0 = nth_root(cert.B, t.ell0);
  if (!B0) return std::nullopt;
  Poly f0 = family_equal0(cert.n, cert.d, cert.spec()).f;
  if (!(f0.scale_variable(*B0) == cert.f))
    fail(ErrorKind::NotNormalized, "f is not f0(B0 x) for B0 = " + B0->to_string());
  return B0;
}

Equal1Family family_equal1(int n, int d, const FieldElement& B, const FieldElement& B1) {
  TorsionParams t = torsion_params(n, d);
  if (t.slack != 1) fail(ErrorKind::SlackNotOne, "slack = " + std::to_string(t.slack));
  if (B.is_zero() || B1.is_zero()) fail(ErrorKind::ZeroParameter, "B and B1 must be nonzero");
  const FieldSpec& spec = B.spec();
  Equal1Family family{build_certificate(n, d, spec.zero(), B, Poly(spec, {spec.one(), B1})),
                      {-B1.inv(), spec.zero()}};
  return family;
}

}  // namespace torsion
