#pragma once

#include "torsion/curve.hpp"
#include "torsion/field.hpp"
#include "torsion/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace torsion {

// x^i y^j with pole order d*i + n*j at the infinite point.
struct Monomial {
  int i = 0;
  int j = 0;
  int pole = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Monomials spanning L(kO), sorted by pole order.
std::vector<Monomial> riemann_roch_basis(int n, int d, int k);
inline int riemann_roch_dimension(int n, int d, int k) {
  return static_cast<int>(riemann_roch_basis(n, d, k).size());
}

// Gaps of the numerical semigroup generated by d and n, found by sieving
// sums of generators. Its size is the genus.
std::vector<int> weierstrass_gaps(int n, int d);
// Number of semigroup elements in [0, k].
int semigroup_count(int n, int d, int k);

struct WitnessTerm {
  Monomial monomial;
  FieldElement coefficient;
};

struct ClassOrder {
  // Least k <= max_k with k(P - O) principal.
  std::optional<int> order;
  // h = sum c * x^i y^j with div(h) = order*(P) - order*(O).
  std::vector<WitnessTerm> witness;
  // principal[k] for k = 0..max_k.
  std::vector<bool> principal;
};

// Riemann-Roch order of [P - O]. P must be unramified (y(P) != 0).
// max_k <= 0 selects 2*m0.
ClassOrder riemann_roch_order(const SuperellipticCurve& curve, const AffinePoint& P, int max_k = 0);
inline std::optional<int> order_of_class(const SuperellipticCurve& curve, const AffinePoint& P, int max_k = 0) {
  return riemann_roch_order(curve, P, max_k).order;
}

// Same computation with FieldElement arithmetic throughout; the F_p fast path
// is checked against it.
ClassOrder riemann_roch_order_reference(const SuperellipticCurve& curve, const AffinePoint& P, int max_k = 0);

// Evaluate sum c * x^i y^j at an affine point.
FieldElement evaluate_witness(const std::vector<WitnessTerm>& h, const FieldElement& x, const FieldElement& y);

// P = (a, 0) with f(a) = 0: div(x - a) = d(P) - d(O), so the order is d.
int order_of_ramified(const SuperellipticCurve& curve, const AffinePoint& P);

// Chord-tangent law on y^2 = f(x), deg f = 3, f need not be monic. The
// identity is the point at infinity.
struct EllipticPoint {
  bool infinity = true;
  FieldElement x;
  FieldElement y;

  static EllipticPoint zero(const FieldSpec& spec) { return {true, spec.zero(), spec.zero()}; }
  static EllipticPoint affine(const AffinePoint& p) { return {false, p.x, p.y}; }
  friend bool operator==(const EllipticPoint& a, const EllipticPoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

// SingularCurve unless deg f = 3, f squarefree and char != 2.
void require_elliptic(const Poly& f);
EllipticPoint elliptic_negate(const EllipticPoint& P);
EllipticPoint elliptic_add(const Poly& f, const EllipticPoint& P, const EllipticPoint& Q);
EllipticPoint elliptic_multiply(const Poly& f, const EllipticPoint& P, std::int64_t m);
std::optional<int> elliptic_order(const Poly& f, const AffinePoint& P, int max_m);

// Reduced Mumford pair on y^2 = f with deg f odd.
struct MumfordDivisor {
  Poly u;  // monic
  Poly v;  // deg v < deg u, v^2 = f mod u

  static MumfordDivisor identity(const FieldSpec& spec);
  static MumfordDivisor from_point(const AffinePoint& P);
  bool is_identity() const { return u.is_constant(); }
  friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
};

// SingularCurve unless deg f is odd, f squarefree and char != 2.
void require_hyperelliptic(const Poly& f);
bool is_valid_divisor(const Poly& f, const MumfordDivisor& D);
MumfordDivisor cantor_reduce(const Poly& f, MumfordDivisor D);
MumfordDivisor cantor_add(const Poly& f, const MumfordDivisor& D1, const MumfordDivisor& D2);
MumfordDivisor cantor_negate(const MumfordDivisor& D);
std::optional<int> cantor_order(const Poly& f, const MumfordDivisor& D, int max_m);
inline std::optional<int> cantor_order(const Poly& f, const AffinePoint& P, int max_m) {
  return cantor_order(f, MumfordDivisor::from_point(P), max_m);
}

// All affine rational points on y^d = f over F_p, by exhaustion.
std::vector<AffinePoint> enumerate_points(const SuperellipticCurve& curve);

}  // namespace torsion
