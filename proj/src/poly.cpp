#include "torsion/poly.hpp"

#include "torsion/error.hpp"

#include <algorithm>
#include <sstream>

namespace torsion {

Poly::Poly(const FieldSpec& spec, std::vector<FieldElement> coeffs) : spec_(spec), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.spec() == spec_)) fail(ErrorKind::FieldMismatch, "coefficient outside " + spec_.to_string());
  trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.spec(), {c}); }

Poly Poly::monomial(const FieldElement& c, std::size_t k) {
  std::vector<FieldElement> coeffs(k + 1, c.spec().zero());
  coeffs[k] = c;
  return Poly(c.spec(), std::move(coeffs));
}

Poly Poly::from_ints(const FieldSpec& spec, std::initializer_list<std::int64_t> coeffs) {
  return from_ints(spec, std::vector<std::int64_t>(coeffs));
}

Poly Poly::from_ints(const FieldSpec& spec, const std::vector<std::int64_t>& coeffs) {
  std::vector<FieldElement> elems;
  elems.reserve(coeffs.size());
  for (auto c : coeffs) elems.push_back(spec.element(c));
  return Poly(spec, std::move(elems));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& other) const {
  if (!(spec_ == other.spec_))
    fail(ErrorKind::FieldMismatch, spec_.to_string() + " vs " + other.spec_.to_string());
}

std::optional<int> Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

int Poly::deg() const {
  if (coeffs_.empty()) fail(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return static_cast<int>(coeffs_.size()) - 1;
}

FieldElement Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : spec_.zero(); }

FieldElement Poly::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

FieldElement Poly::operator()(const FieldElement& x) const {
  if (!(x.spec() == spec_)) fail(ErrorKind::FieldMismatch, "evaluation point outside " + spec_.to_string());
  FieldElement acc = spec_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_field(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), spec_.zero());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_field(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), spec_.zero());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.spec_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.spec_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.spec_, std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const FieldElement& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) { return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_; }

Poly Poly::pow(std::int64_t e) const {
  if (e < 0) fail(ErrorKind::BadParameters, "negative polynomial power");
  Poly result = constant(spec_.one()), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::compose(const Poly& g) const {
  require_same_field(g);
  Poly acc(spec_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= g;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::shift(const FieldElement& a) const {
  if (a.is_zero()) return *this;
  return compose(Poly(spec_, {a, spec_.one()}));
}

Poly Poly::scale_variable(const FieldElement& c) const {
  Poly r = *this;
  FieldElement power = spec_.one();
  for (auto& x : r.coeffs_) {
    x *= power;
    power *= c;
  }
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    bool unit = coeffs_[i].is_one();
    if (!unit || i == 0) out << coeffs_[i].to_string();
    if (i > 0) out << (unit ? "" : "*") << "x";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

DivRem divrem(const Poly& f, const Poly& g) {
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (!(f.spec() == g.spec())) fail(ErrorKind::FieldMismatch, "divrem across fields");
  const FieldSpec& spec = f.spec();
  if (f.is_zero() || f.deg() < g.deg()) return {Poly(spec), f};
  std::vector<FieldElement> rem = f.coeffs();
  const auto& gc = g.coeffs();
  std::size_t dg = gc.size() - 1;
  FieldElement inv_lead = gc.back().inv();
  std::vector<FieldElement> quo(rem.size() - dg, spec.zero());
  for (std::size_t k = rem.size(); k-- > dg;) {
    FieldElement q = rem[k] * inv_lead;
    quo[k - dg] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= q * gc[j];
  }
  rem.resize(dg);
  return {Poly(spec, std::move(quo)), Poly(spec, std::move(rem))};
}

Poly exact_div(const Poly& f, const Poly& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) fail(ErrorKind::BadParameters, "inexact polynomial division");
  return q;
}

Poly derivative(const Poly& f) {
  const FieldSpec& spec = f.spec();
  if (f.coeffs().size() <= 1) return Poly(spec);
  std::vector<FieldElement> out;
  out.reserve(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    out.push_back(f.coeffs()[i] * spec.element(static_cast<std::int64_t>(i)));
  return Poly(spec, std::move(out));
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::BothZero, "gcd(0, 0)");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::BothZero, "gcd(0, 0)");
  const FieldSpec& spec = f.spec();
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(spec.one()), s1(spec);
  Poly t0(spec), t1 = Poly::constant(spec.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    Poly t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  FieldElement scale = r0.leading().inv();
  return {r0 * scale, s0 * scale, t0 * scale};
}

SquarefreeReport squarefree_report(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefreeness of the zero polynomial");
  if (f.is_constant()) return {true, false};
  Poly df = derivative(f);
  if (df.is_zero()) return {false, true};
  return {gcd(f, df).is_constant(), false};
}

bool is_squarefree(const Poly& f) { return squarefree_report(f).squarefree; }

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      int e = 0;
      while (n % q == 0) {
        n /= q;
        ++e;
      }
      factors.emplace_back(q, e);
    }
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : factors) {
    std::size_t count = divs.size();
    mpz_class power = 1;
    for (int i = 0; i < e; ++i) {
      power *= q;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * power);
    }
  }
  return divs;
}

std::vector<FieldElement> rational_roots(const Poly& f) {
  const FieldSpec& spec = f.spec();
  mpz_class common = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : f.coeffs()) ints.push_back(mpz_class(c.rational() * common));
  std::vector<FieldElement> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.push_back(spec.zero());
  if (low + 1 < ints.size()) {
    auto numerators = divisors(ints[low]);
    auto denominators = divisors(ints.back());
    for (const auto& q : denominators) {
      for (const auto& p : numerators) {
        for (int sign : {1, -1}) {
          mpz_class num = p;
          if (sign < 0) num = -num;
          mpq_class candidate(num, q);
          candidate.canonicalize();
          if (candidate.get_den() != q) continue;  // already covered by a smaller denominator
          FieldElement x = spec.element(candidate);
          if (f(x).is_zero()) roots.push_back(x);
        }
      }
    }
  }
  return roots;
}

}  // namespace

std::vector<FieldElement> roots_in_field(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const FieldSpec& spec = f.spec();
  std::vector<FieldElement> roots;
  if (spec.is_prime_field()) {
    for (std::int64_t r = 0; r < spec.p(); ++r) {
      FieldElement x = spec.element(r);
      if (f(x).is_zero()) roots.push_back(x);
    }
  } else {
    roots = rational_roots(f);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

TruncatedSeries::TruncatedSeries(const FieldSpec& spec, std::size_t precision)
    : spec_(spec), coeffs_(precision, spec.zero()) {}

TruncatedSeries::TruncatedSeries(const FieldSpec& spec, std::vector<FieldElement> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {}

TruncatedSeries TruncatedSeries::from_poly(const Poly& f, std::size_t precision) {
  TruncatedSeries s(f.spec(), precision);
  for (std::size_t i = 0; i < precision && i < f.coeffs().size(); ++i) s.coeffs_[i] = f.coeffs()[i];
  return s;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t precision) const {
  TruncatedSeries s(spec_, precision);
  for (std::size_t i = 0; i < precision && i < coeffs_.size(); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
  std::size_t n = std::min(precision(), other.precision());
  TruncatedSeries s = truncate(n);
  for (std::size_t i = 0; i < n; ++i) s.coeffs_[i] -= other.coeffs_[i];
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  std::size_t n = std::min(precision(), other.precision());
  TruncatedSeries s(spec_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) s.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const FieldElement& c) const {
  TruncatedSeries s = *this;
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

TruncatedSeries TruncatedSeries::pow(std::int64_t e) const {
  TruncatedSeries result(spec_, precision());
  if (precision() > 0) result.coeffs_[0] = spec_.one();
  TruncatedSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::inverse() const {
  std::size_t n = precision();
  if (n == 0) return *this;
  if (coeffs_[0].is_zero()) fail(ErrorKind::DivisionByZero, "series with zero constant term is not invertible");
  TruncatedSeries inv(spec_, n);
  FieldElement c0 = coeffs_[0].inv();
  inv.coeffs_[0] = c0;
  for (std::size_t k = 1; k < n; ++k) {
    FieldElement acc = spec_.zero();
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * inv.coeffs_[k - j];
    inv.coeffs_[k] = -acc * c0;
  }
  return inv;
}

TruncatedSeries series_dth_root(const Poly& f, std::int64_t d, const FieldElement& center,
                                const FieldElement& y0, std::size_t precision) {
  const FieldSpec& spec = f.spec();
  if (d < 1 || precision < 1) fail(ErrorKind::BadParameters, "series_dth_root needs d >= 1 and N >= 1");
  if (spec.char_divides(d)) fail(ErrorKind::CharDividesD, "characteristic divides " + std::to_string(d));
  TruncatedSeries target = TruncatedSeries::from_poly(f.shift(center), precision);
  if (y0.is_zero() || !(y0.pow(d) == target[0]))
    fail(ErrorKind::BadInitialValue, "y0^d != f(center) or y0 = 0");
  TruncatedSeries s(spec, std::vector<FieldElement>{y0});
  FieldElement d_elem = spec.element(d);
  std::size_t known = 1;
  while (known < precision) {
    known = std::min(2 * known, precision);
    s = s.truncate(known);
    TruncatedSeries power = s.pow(d - 1);
    TruncatedSeries residual = power * s - target.truncate(known);
    s = s - residual * (power * d_elem).inverse();
  }
  return s;
}

}  // namespace torsion
