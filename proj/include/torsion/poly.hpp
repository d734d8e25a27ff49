#pragma once

#include "torsion/field.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace torsion {

// Dense univariate polynomial, coefficients in ascending degree with trailing
// zeros trimmed. The zero polynomial has no coefficients and no degree.
class Poly {
 public:
  // Zero polynomial over Q.
  Poly() : spec_(FieldSpec::rationals()) {}
  explicit Poly(const FieldSpec& spec) : spec_(spec) {}
  Poly(const FieldSpec& spec, std::vector<FieldElement> coeffs);

  static Poly constant(const FieldElement& c);
  // c * x^k
  static Poly monomial(const FieldElement& c, std::size_t k);
  static Poly x(const FieldSpec& spec) { return monomial(spec.one(), 1); }
  // Ascending integer coefficients mapped into the field.
  static Poly from_ints(const FieldSpec& spec, std::initializer_list<std::int64_t> coeffs);
  static Poly from_ints(const FieldSpec& spec, const std::vector<std::int64_t>& coeffs);

  const FieldSpec& spec() const noexcept { return spec_; }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  // nullopt encodes deg(0) = -infinity.
  std::optional<int> degree() const noexcept;
  // Degree of a nonzero polynomial; ZeroPolynomial otherwise.
  int deg() const;
  FieldElement coeff(std::size_t i) const;
  FieldElement leading() const;

  FieldElement operator()(const FieldElement& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const FieldElement& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const FieldElement& c) { return a *= c; }
  friend Poly operator*(const FieldElement& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(std::int64_t e) const;
  // f(g(x))
  Poly compose(const Poly& g) const;
  // f(x + a)
  Poly shift(const FieldElement& a) const;
  // f(c x)
  Poly scale_variable(const FieldElement& c) const;
  Poly monic() const;

  std::string to_string() const;

 private:
  void trim();
  void require_same_field(const Poly& other) const;

  FieldSpec spec_;
  std::vector<FieldElement> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

DivRem divrem(const Poly& f, const Poly& g);
inline Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).remainder; }
// Exact division; throws BadParameters if g does not divide f.
Poly exact_div(const Poly& f, const Poly& g);

Poly derivative(const Poly& f);

// Monic gcd; BothZero if f = g = 0.
Poly gcd(const Poly& f, const Poly& g);

struct ExtendedGcd {
  Poly gcd;  // monic
  Poly s;
  Poly t;    // s*f + t*g = gcd
};
ExtendedGcd extended_gcd(const Poly& f, const Poly& g);

struct SquarefreeReport {
  bool squarefree = false;
  // f' = 0 over F_p for nonconstant f; reported as not squarefree.
  bool inseparable = false;
};
SquarefreeReport squarefree_report(const Poly& f);
bool is_squarefree(const Poly& f);

// Distinct roots of f in the base field, ascending.
std::vector<FieldElement> roots_in_field(const Poly& f);

// A power series known modulo t^N.
class TruncatedSeries {
 public:
  TruncatedSeries(const FieldSpec& spec, std::size_t precision);
  TruncatedSeries(const FieldSpec& spec, std::vector<FieldElement> coeffs);
  // f mod t^N
  static TruncatedSeries from_poly(const Poly& f, std::size_t precision);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t precision() const noexcept { return coeffs_.size(); }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  FieldElement& operator[](std::size_t i) { return coeffs_[i]; }
  const FieldElement& operator[](std::size_t i) const { return coeffs_[i]; }

  TruncatedSeries truncate(std::size_t precision) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const FieldElement& c) const;
  TruncatedSeries pow(std::int64_t e) const;
  // Multiplicative inverse; the constant term must be nonzero.
  TruncatedSeries inverse() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  FieldSpec spec_;
  std::vector<FieldElement> coeffs_;
};

// s(t) with s(0) = y0 and s^d = f(center + t) mod t^N, by Newton iteration
// with precision doubling.
TruncatedSeries series_dth_root(const Poly& f, std::int64_t d, const FieldElement& center,
                                const FieldElement& y0, std::size_t precision);

}  // namespace torsion
