#include "torsion/field.hpp"

#include "torsion/error.hpp"

#include <cstdlib>

namespace torsion {

namespace {

std::uint64_t reduce(std::int64_t value, std::int64_t p) {
  std::int64_t r = value % p;
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

std::uint64_t reduce(const mpz_class& value, std::int64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::vector<std::int64_t> prime_divisors(std::int64_t m) {
  std::vector<std::int64_t> primes;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (!is_prime(p)) fail(ErrorKind::BadParameters, "field characteristic " + std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 62)) fail(ErrorKind::BadParameters, "prime too large");
  return FieldSpec(Kind::PrimeField, p);
}

FieldElement FieldSpec::zero() const { return element(0); }
FieldElement FieldSpec::one() const { return element(1); }

FieldElement FieldSpec::element(std::int64_t value) const {
  if (is_rationals()) return FieldElement(*this, mpq_class(static_cast<long>(value)));
  return FieldElement(*this, reduce(value, p_));
}

FieldElement FieldSpec::element(const mpq_class& value) const {
  if (is_rationals()) return FieldElement(*this, value);
  FieldElement num(*this, reduce(value.get_num(), p_));
  FieldElement den(*this, reduce(value.get_den(), p_));
  return num / den;
}

std::string FieldSpec::to_string() const { return is_rationals() ? "Q" : "F" + std::to_string(p_); }

FieldElement::FieldElement(const FieldSpec& spec, std::uint64_t residue) : spec_(spec) {
  if (spec.is_rationals()) {
    value_ = mpq_class(static_cast<unsigned long>(residue));
  } else {
    value_ = residue % static_cast<std::uint64_t>(spec.p());
  }
}

FieldElement::FieldElement(const FieldSpec& spec, mpq_class value) : spec_(spec) {
  if (spec.is_rationals()) {
    value.canonicalize();
    value_ = std::move(value);
  } else {
    *this = spec.element(value);
  }
}

FieldElement FieldElement::parse(const FieldSpec& spec, const std::string& text) {
  mpq_class value;
  if (text.empty() || value.set_str(text, 10) != 0) fail(ErrorKind::SchemaViolation, "malformed scalar '" + text + "'");
  if (value.get_den() == 0) fail(ErrorKind::SchemaViolation, "zero denominator in '" + text + "'");
  value.canonicalize();
  return spec.element(value);
}

bool FieldElement::is_zero() const noexcept {
  if (spec_.is_rationals()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (spec_.is_rationals()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (!(spec_ == other.spec_))
    fail(ErrorKind::FieldMismatch, spec_.to_string() + " vs " + other.spec_.to_string());
}

FieldElement FieldElement::operator-() const {
  if (spec_.is_rationals()) return FieldElement(spec_, mpq_class(-rational()));
  std::uint64_t r = residue();
  return FieldElement(spec_, r == 0 ? 0 : static_cast<std::uint64_t>(spec_.p()) - r);
}

FieldElement FieldElement::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (spec_.is_rationals()) return FieldElement(spec_, mpq_class(1 / rational()));
  // Extended Euclid on (r, p).
  std::int64_t a = static_cast<std::int64_t>(residue()), b = spec_.p();
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return FieldElement(spec_, reduce(x0, spec_.p()));
}

FieldElement FieldElement::pow(std::int64_t exponent) const {
  if (exponent < 0) return inv().pow(-exponent);
  if (spec_.is_prime_field())
    return FieldElement(spec_, pow_mod(residue(), static_cast<std::uint64_t>(exponent),
                                       static_cast<std::uint64_t>(spec_.p())));
  mpq_class result(1), base = rational();
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return FieldElement(spec_, result);
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_same_field(other);
  if (spec_.is_rationals()) {
    std::get<mpq_class>(value_) += other.rational();
  } else {
    std::uint64_t p = static_cast<std::uint64_t>(spec_.p());
    std::uint64_t s = residue() + other.residue();
    value_ = s >= p ? s - p : s;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  require_same_field(other);
  if (spec_.is_rationals()) {
    std::get<mpq_class>(value_) -= other.rational();
  } else {
    std::uint64_t p = static_cast<std::uint64_t>(spec_.p());
    std::uint64_t a = residue(), b = other.residue();
    value_ = a >= b ? a - b : a + p - b;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  require_same_field(other);
  if (spec_.is_rationals()) {
    std::get<mpq_class>(value_) *= other.rational();
  } else {
    value_ = mul_mod(residue(), other.residue(), static_cast<std::uint64_t>(spec_.p()));
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  require_same_field(other);
  return *this *= other.inv();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec_ == b.spec_)) return false;
  return a.value_ == b.value_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  a.require_same_field(b);
  if (a.spec_.is_rationals()) return a.rational() < b.rational();
  return a.residue() < b.residue();
}

std::string FieldElement::to_string() const {
  if (spec_.is_prime_field()) return std::to_string(residue());
  return rational().get_str(10);
}

std::optional<FieldElement> nth_root(const FieldElement& x, std::int64_t k) {
  if (k < 1) fail(ErrorKind::BadParameters, "root index must be positive");
  const FieldSpec& spec = x.spec();
  if (k == 1 || x.is_zero()) return x;
  if (spec.is_prime_field()) {
    for (std::int64_t r = 1; r < spec.p(); ++r) {
      FieldElement candidate = spec.element(r);
      if (candidate.pow(k) == x) return candidate;
    }
    return std::nullopt;
  }
  const mpq_class& q = x.rational();
  bool negative = sgn(q) < 0;
  if (negative && k % 2 == 0) return std::nullopt;
  mpz_class num = abs(q.get_num()), den = q.get_den(), rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  mpq_class root(rn, rd);
  if (negative) root = -root;
  return FieldElement(spec, root);
}

std::int64_t multiplicative_order(const FieldElement& x) {
  const FieldSpec& spec = x.spec();
  if (!spec.is_prime_field()) fail(ErrorKind::UnsupportedField, "multiplicative order needs a prime field");
  if (x.is_zero()) fail(ErrorKind::DivisionByZero, "zero has no multiplicative order");
  std::int64_t order = spec.p() - 1;
  for (std::int64_t q : prime_divisors(order)) {
    while (order % q == 0 && x.pow(order / q).is_one()) order /= q;
  }
  return order;
}

std::vector<FieldElement> roots_of_unity(const FieldSpec& spec, std::int64_t m) {
  if (m < 1) fail(ErrorKind::BadParameters, "roots_of_unity needs m >= 1");
  FieldElement generator = spec.one();
  if (spec.is_rationals()) {
    if (m > 2) fail(ErrorKind::UnsupportedField, "mu_" + std::to_string(m) + " is not contained in Q");
    if (m == 2) generator = spec.element(-1);
  } else {
    if ((spec.p() - 1) % m != 0)
      fail(ErrorKind::UnsupportedField,
           "mu_" + std::to_string(m) + " is not contained in " + spec.to_string());
    if (m > 1) {
      for (std::int64_t g = 2; g < spec.p(); ++g) {
        FieldElement candidate = spec.element(g);
        if (multiplicative_order(candidate) == m) {
          generator = candidate;
          break;
        }
      }
    }
  }
  std::vector<FieldElement> roots;
  roots.reserve(static_cast<std::size_t>(m));
  FieldElement power = spec.one();
  for (std::int64_t i = 0; i < m; ++i) {
    roots.push_back(power);
    power *= generator;
  }
  return roots;
}

}  // namespace torsion
