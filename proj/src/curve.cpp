#include "torsion/curve.hpp"

#include "torsion/error.hpp"

#include <numeric>

namespace torsion {

TorsionParams torsion_params(int n, int d) {
  if (d < 2 || n <= d || std::gcd(n, d) != 1)
    fail(ErrorKind::BadParameters,
         "need 2 <= d < n with gcd(n, d) = 1, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  TorsionParams t;
  t.n = n;
  t.d = d;
  t.ell0 = (n + d) / d;
  t.m0 = d * t.ell0;
  t.slack = n - t.m0 + t.ell0;
  return t;
}

SuperellipticCurve::SuperellipticCurve(int d, Poly f) : f_(std::move(f)) {
  if (f_.is_zero()) fail(ErrorKind::BadParameters, "f is zero");
  params_ = torsion_params(f_.deg(), d);
  if (spec().char_divides(d)) fail(ErrorKind::CharDividesD, "characteristic divides d");
  if (!is_squarefree(f_)) fail(ErrorKind::NotSquarefree, "f = " + f_.to_string() + " has a repeated root");
}

bool SuperellipticCurve::contains(const FieldElement& x, const FieldElement& y) const {
  return y.pow(params_.d) == f_(x);
}

AffinePoint SuperellipticCurve::point(const FieldElement& x, const FieldElement& y) const {
  if (!contains(x, y))
    fail(ErrorKind::NotOnCurve, "(" + x.to_string() + ", " + y.to_string() + ") is not on y^" +
                                    std::to_string(params_.d) + " = " + f_.to_string());
  return {x, y};
}

std::vector<AffinePoint> SuperellipticCurve::points_above(const FieldElement& x) const {
  FieldElement value = f_(x);
  std::vector<AffinePoint> points;
  if (value.is_zero()) {
    points.push_back({x, spec().zero()});
    return points;
  }
  auto root = nth_root(value, params_.d);
  if (!root) return points;
  if (spec().is_prime_field()) {
    for (std::int64_t r = 1; r < spec().p(); ++r) {
      FieldElement y = spec().element(r);
      if (y.pow(params_.d) == value) points.push_back({x, y});
    }
  } else {
    points.push_back({x, *root});
    if (params_.d % 2 == 0) points.push_back({x, -*root});
  }
  return points;
}

std::vector<AffinePoint> mu_d_orbit(const SuperellipticCurve& curve, const AffinePoint& point) {
  curve.point(point.x, point.y);
  if (point.y.is_zero()) fail(ErrorKind::RamifiedPoint, "y = 0: the mu_d orbit is a single point");
  std::vector<AffinePoint> orbit;
  for (const auto& zeta : roots_of_unity(curve.spec(), curve.d())) orbit.push_back({point.x, zeta * point.y});
  return orbit;
}

std::string_view to_string(Reachability r) {
  switch (r) {
    case Reachability::ReachableDOrN: return "Reachable_d_or_n";
    case Reachability::Impossible: return "Impossible";
    case Reachability::RequiresM0Conditions: return "RequiresM0Conditions";
    case Reachability::AboveM0: return "AboveM0";
  }
  return "Unknown";
}

ReachabilityVerdict reachability_status(int n, int d, int m, std::int64_t characteristic) {
  TorsionParams t = torsion_params(n, d);
  if (m <= 1) fail(ErrorKind::BadParameters, "m must exceed 1");
  if (characteristic < 0 || (characteristic > 0 && !is_prime(characteristic)))
    fail(ErrorKind::BadParameters, "characteristic must be 0 or a prime");
  if (characteristic > 0 && d % characteristic == 0) fail(ErrorKind::BadParameters, "characteristic divides d");

  ReachabilityVerdict v;
  if (m == d || m == n) {
    v.status = Reachability::ReachableDOrN;
    v.rule = "(i)";
  } else if (m < n) {
    v.status = Reachability::Impossible;
    v.rule = "(ii)";
  } else if (m < t.m0) {
    v.status = Reachability::Impossible;
    v.rule = "(iv)";
  } else if (m == t.m0) {
    if (t.slack < 0) {
      v.status = Reachability::Impossible;
      v.rule = "(v)";
    } else if (t.slack == 0 && characteristic > 0 && t.ell0 % characteristic == 0) {
      // With zero slack the certificate polynomial is a polynomial in x^p.
      v.status = Reachability::Impossible;
      v.rule = "slack 0, char | ell0";
    } else {
      v.status = Reachability::RequiresM0Conditions;
      v.rule = "(vi)";
      if (characteristic == 0) v.sufficient_conditions.push_back("(vi)(1)");
      if (characteristic > n) v.sufficient_conditions.push_back("(vi)(2)");
      if (t.slack == 0 && (characteristic == 0 || t.ell0 % characteristic != 0))
        v.sufficient_conditions.push_back("(vi)(3)");
      if (t.slack > 0 && (characteristic == 0 || t.slack % characteristic != 0))
        v.sufficient_conditions.push_back("(vi)(4)");
    }
  } else if (m < 2 * n && m % d != 0 && m % d != n % d) {
    v.status = Reachability::Impossible;
    v.rule = "(iii)";
  } else {
    v.status = Reachability::AboveM0;
    v.rule = "undetermined";
  }
  return v;
}

}  // namespace torsion
