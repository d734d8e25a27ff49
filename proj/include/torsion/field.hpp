#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace torsion {

class FieldElement;

// The base field K0: either the rationals or a prime field F_p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  // Throws BadParameters unless p is prime.
  static FieldSpec prime(std::int64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t characteristic() const noexcept { return p_; }
  // True when the characteristic is positive and divides k.
  bool char_divides(std::int64_t k) const noexcept { return p_ != 0 && k % p_ == 0; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::int64_t value) const;
  FieldElement element(const mpq_class& value) const;

  // "Q" or "F<p>".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

// An exact scalar. Rationals are kept in lowest terms with positive
// denominator; prime-field values are residues in [0, p).
class FieldElement {
 public:
  FieldElement() : FieldElement(FieldSpec::rationals(), mpq_class(0)) {}
  FieldElement(const FieldSpec& spec, std::uint64_t residue);
  FieldElement(const FieldSpec& spec, mpq_class value);

  // Accepts "a", "a/b" (both fields) with optional sign.
  static FieldElement parse(const FieldSpec& spec, const std::string& text);

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t exponent) const;

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  // Total order within one field: residues for F_p, numeric order for Q.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  // "num/den" or "num" over Q, the decimal residue over F_p.
  std::string to_string() const;

 private:
  void require_same_field(const FieldElement& other) const;

  FieldSpec spec_;
  std::variant<std::uint64_t, mpq_class> value_;
};

// Some r with r^k = x in the base field, or nullopt. Over F_p the smallest
// residue is returned; over Q the positive root when k is even.
std::optional<FieldElement> nth_root(const FieldElement& x, std::int64_t k);

// All m-th roots of unity as g^0, ..., g^(m-1) for the smallest-valued
// generator g of the order-m subgroup. UnsupportedField if mu_m is not
// contained in the base field.
std::vector<FieldElement> roots_of_unity(const FieldSpec& spec, std::int64_t m);

// Multiplicative order of a nonzero prime-field element.
std::int64_t multiplicative_order(const FieldElement& x);

}  // namespace torsion
