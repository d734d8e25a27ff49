#pragma once

#include "torsion/curve.hpp"
#include "torsion/field.hpp"
#include "torsion/poly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace torsion {

// Necessary conditions for two packets of order-m0 points (char 0).
enum class Admissibility { Allowed, Disallowed, Exempt };

std::string to_string(Admissibility a);

struct AdmissibilityVerdict {
  int n = 0;
  int d = 0;
  Admissibility status = Admissibility::Allowed;
  bool allowed = false;
  // Violated items among "(i)".."(vi)" and "slack".
  std::vector<std::string> reasons;
  std::string caveat;
};

// Errors: BadParameters.
AdmissibilityVerdict two_packet_admissible(int n, int d);

struct FermatCheck {
  bool is_constant = false;
  std::optional<FieldElement> value;
};

// f1^d + f2^d + f3^d, reported as a nonzero constant or not.
FermatCheck fermat_identity_check(const Poly& f1, const Poly& f2, const Poly& f3, int d);

Poly wronskian3(const Poly& g1, const Poly& g2, const Poly& g3);

struct WronskianAudit {
  int d = 0;
  int ell0 = 0;
  Poly W;
  int degree = 0;
  int lower = 0;  // 3 ell0 (d - 2)
  int upper = 0;  // 2 ell0 d - 3
  bool ell_d6 = false;  // ell0 (d - 6) <= -3
  bool in_window() const { return lower <= degree && degree <= upper; }
};

// W(f1^d, f2^d, f3^d) against its degree window. Errors: LinearlyDependent.
WronskianAudit wronskian_degree_audit(const Poly& f1, const Poly& f2, const Poly& f3, int d, int ell0);

struct HProduct {
  Poly H;
  // Positions in the input with C eps = 1; those factors are the constant 1.
  std::vector<std::size_t> degenerate;
};

// prod over eps in I of ((1 - C eps) x + 1).
HProduct build_H(const std::vector<FieldElement>& I, const FieldElement& C);

// The elements of mu_{n+1} at the given positions of roots_of_unity(spec, n+1).
// Errors: NoRootOfUnityStructure, BadParameters (repeated or out of range).
std::vector<FieldElement> select_roots(const FieldSpec& spec, int n, const std::vector<std::size_t>& indices);
std::vector<std::size_t> complement_indices(int n, const std::vector<std::size_t>& indices);

enum class PacketCase { General, C1_5, C1_6 };

std::string to_string(PacketCase c);

// d = 2: f = A1 x^(n+1) - u^2 = A2 (x+1)^(n+1) - v^2.
struct PacketFamily {
  FieldSpec spec = FieldSpec::rationals();
  int n = 0;
  int ell0 = 0;
  std::vector<std::size_t> I;
  PacketCase packet_case = PacketCase::General;
  FieldElement lambda;
  FieldElement C;
  FieldElement A1;
  FieldElement A2;
  Poly H_I;
  Poly H_co;
  Poly u_tilde;
  Poly v_tilde;
  Poly u;
  Poly v;
  Poly f;
  // A1 or A2 had no square root: the family is rescaled to A1 = 1,
  // A2 = A2/A1, u = u~, v = v~ / C^ell0, f = x^(n+1) - u~^2.
  bool twisted = false;

  bool identity_holds() const;
  // prod ((1 - C eps) x + 1) = (v~ + C^ell0 u~)(v~ - C^ell0 u~)
  bool factorization_holds() const;
};

// The polynomial data before degree and squarefree checks.
// Errors: NoRootOfUnityStructure, BadParameters, ZeroParameter.
PacketFamily draft_two_packet_general(const FieldSpec& spec, int n, const std::vector<std::size_t>& I,
                                      const FieldElement& lambda, const FieldElement& A1, const FieldElement& A2);
// Errors: as above and ExcludedLambda (lambda = +-1).
PacketFamily draft_two_packet_equal(const FieldSpec& spec, int n, const std::vector<std::size_t>& I,
                                    const FieldElement& lambda, PacketCase packet_case);

// Drafts, then requires deg f = n (WrongDegree) and f squarefree (NotSquarefree).
PacketFamily build_two_packet_general(const FieldSpec& spec, int n, const std::vector<std::size_t>& I,
                                      const FieldElement& lambda, const FieldElement& A1, const FieldElement& A2);
PacketFamily build_two_packet_equal(const FieldSpec& spec, int n, const std::vector<std::size_t>& I,
                                    const FieldElement& lambda, PacketCase packet_case);

// Points of y^2 = f above x = 0 and x = -1 (F_p, exhaustive).
std::vector<AffinePoint> packet_points(const PacketFamily& family);

// Fermat triple in t = 1/x: (sqrt(A2)(1+t)^ell0, rev u, eta rev v) with
// eta^2 = -1. nullopt if sqrt(A2) or sqrt(-1) is missing.
struct FermatTriple {
  Poly f1, f2, f3;
};
std::optional<FermatTriple> fermat_triple(const PacketFamily& family);

struct M0PlusOneExample {
  SuperellipticCurve curve;
  FieldElement A1;
  FieldElement A2;
  Poly v;
  std::optional<FieldElement> gamma;  // gamma^d = -1
  std::optional<Poly> u;
  std::vector<FieldElement> abscissas;
  std::vector<AffinePoint> points;
};

// y^d = (x+1)^m0 - x^m0 with m0 = n + 1. Errors: BadParameters, CharDividesM0.
M0PlusOneExample example_m0_equals_nplus1(int n, int d, const FieldSpec& spec);

// x^(n+1) - u~^2 with u~ = (lambda H_I - H_co / lambda) / (2 C^ell0).
Poly finite_polynomial(const FieldSpec& spec, int n, const std::vector<std::size_t>& I, const FieldElement& C,
                       const FieldElement& lambda);

struct BadLambdaReport {
  Poly L_I;     // ell0 H_I - x H_I'
  Poly L_co;
  Poly mult10;
  std::vector<FieldElement> x0;          // roots used
  std::vector<FieldElement> candidates;  // sorted, contains +-1
  // The corrected mult10 is identically zero; x0 then ranges over all of F_p.
  bool mult10_vanishes = false;
  bool unbounded = false;  // some x0 left the quadratic identically zero
};

// Candidate bad lambdas for the given I and C. The factor k in
// x^(n+1) - u~^2 = (k x^ell0 - phi)(k x^ell0 + phi) / k^2, phi = lambda H_I - H_co / lambda,
// is 2 C^ell0; as_printed uses C^ell0, which loses the 4 in
// 4 C^(n+1) x^(n+1) - phi^2 and misses some bad lambdas.
// Errors: UnsupportedField, BadParameters, Lem1Violation.
BadLambdaReport bad_lambda_set(const FieldSpec& spec, int n, const std::vector<std::size_t>& I, const FieldElement& C,
                               bool as_printed = false);

// Every lambda in F_p^* for which finite_polynomial is not squarefree.
std::vector<FieldElement> confirmed_bad_lambdas(const FieldSpec& spec, int n, const std::vector<std::size_t>& I,
                                                const FieldElement& C);

struct ShiftResult {
  SuperellipticCurve curve;
  FieldElement lambda;  // S(z) = lambda z + mu
  FieldElement mu;
  std::optional<FieldElement> y_scale;  // s with s^d = lambda^n
  bool needs_extension = false;
  std::optional<AffinePoint> P_image;
  std::optional<AffinePoint> Q_image;
};

// Errors: SameAbscissa, NotOnCurve.
ShiftResult shift_points_to_0_minus1(const SuperellipticCurve& curve, const AffinePoint& P, const AffinePoint& Q);

}  // namespace torsion
