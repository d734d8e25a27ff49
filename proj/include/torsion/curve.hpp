#pragma once

#include "torsion/field.hpp"
#include "torsion/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace torsion {

// ell0 = floor((n+d)/d), m0 = d*ell0 (the multiple of d strictly between n
// and n+d), slack = n - m0 + ell0.
struct TorsionParams {
  int n = 0;
  int d = 0;
  int ell0 = 0;
  int m0 = 0;
  int slack = 0;
};

// BadParameters unless 2 <= d < n and gcd(n, d) = 1.
TorsionParams torsion_params(int n, int d);

struct AffinePoint {
  FieldElement x;
  FieldElement y;

  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

// y^d = f(x) with f squarefree of degree n, gcd(n, d) = 1 and char not
// dividing d. f need not be monic.
class SuperellipticCurve {
 public:
  SuperellipticCurve(int d, Poly f);

  int d() const noexcept { return params_.d; }
  int n() const noexcept { return params_.n; }
  const Poly& f() const noexcept { return f_; }
  const FieldSpec& spec() const noexcept { return f_.spec(); }
  const TorsionParams& params() const noexcept { return params_; }
  // Genus (n-1)(d-1)/2.
  int genus() const noexcept { return (params_.n - 1) * (params_.d - 1) / 2; }

  bool contains(const FieldElement& x, const FieldElement& y) const;
  // NotOnCurve unless y^d = f(x).
  AffinePoint point(const FieldElement& x, const FieldElement& y) const;
  // All affine points above x that are rational over the base field.
  std::vector<AffinePoint> points_above(const FieldElement& x) const;

 private:
  Poly f_;
  TorsionParams params_;
};

inline AffinePoint point_on_curve(const SuperellipticCurve& curve, const FieldElement& x, const FieldElement& y) {
  return curve.point(x, y);
}

// (x, zeta*y) for zeta in mu_d, in roots_of_unity order.
std::vector<AffinePoint> mu_d_orbit(const SuperellipticCurve& curve, const AffinePoint& point);

enum class Reachability { ReachableDOrN, Impossible, RequiresM0Conditions, AboveM0 };

std::string_view to_string(Reachability r);

struct ReachabilityVerdict {
  Reachability status = Reachability::AboveM0;
  // The known result that decided the status, e.g. "(ii)".
  std::string rule;
  // For RequiresM0Conditions: the sufficient characteristic conditions that
  // hold ("(vi)(1)" ... "(vi)(4)"). Each only applies over infinite K0.
  std::vector<std::string> sufficient_conditions;
};

ReachabilityVerdict reachability_status(int n, int d, int m, std::int64_t characteristic);

}  // namespace torsion
