#include "torsion/oracle.hpp"

#include "torsion/error.hpp"

#include <algorithm>

namespace torsion {

std::vector<Monomial> riemann_roch_basis(int n, int d, int k) {
  std::vector<Monomial> basis;
  for (int j = 0; j < d && n * j <= k; ++j)
    for (int i = 0; d * i + n * j <= k; ++i) basis.push_back({i, j, d * i + n * j});
  std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) { return a.pole < b.pole; });
  return basis;
}

namespace {

std::vector<bool> semigroup_sieve(int n, int d, int limit) {
  std::vector<bool> in(static_cast<std::size_t>(std::max(limit, 0)) + 1, false);
  in[0] = true;
  for (int s = 1; s <= limit; ++s)
    in[s] = (s >= d && in[s - d]) || (s >= n && in[s - n]);
  return in;
}

}  // namespace

std::vector<int> weierstrass_gaps(int n, int d) {
  torsion_params(n, d);
  // Every integer >= (n-1)(d-1) lies in the semigroup.
  int conductor = (n - 1) * (d - 1);
  auto in = semigroup_sieve(n, d, conductor);
  std::vector<int> gaps;
  for (int s = 1; s < conductor; ++s)
    if (!in[s]) gaps.push_back(s);
  return gaps;
}

int semigroup_count(int n, int d, int k) {
  if (k < 0) return 0;
  auto in = semigroup_sieve(n, d, k);
  return static_cast<int>(std::count(in.begin(), in.end(), true));
}

namespace {

struct GenericOps {
  using T = FieldElement;
  FieldSpec spec;

  T zero() const { return spec.zero(); }
  T one() const { return spec.one(); }
  T from(const FieldElement& e) const { return e; }
  FieldElement to_element(const T& v) const { return v; }
  static bool is_zero(const T& v) { return v.is_zero(); }
  static T mul(const T& a, const T& b) { return a * b; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T inv(const T& a) { return a.inv(); }
};

struct ModOps {
  using T = std::uint64_t;
  FieldSpec spec;
  std::uint64_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  T from(const FieldElement& e) const { return e.residue(); }
  FieldElement to_element(T v) const { return FieldElement(spec, v); }
  static bool is_zero(T v) { return v == 0; }
  T mul(T a, T b) const { return static_cast<T>(static_cast<unsigned __int128>(a) * b % p); }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T inv(T a) const { return FieldElement(spec, a).inv().residue(); }
};

template <class Ops>
ClassOrder eliminate(const Ops& ops, const SuperellipticCurve& curve, const AffinePoint& P, int max_k) {
  using T = typename Ops::T;
  const int n = curve.n(), d = curve.d();
  const std::size_t N = static_cast<std::size_t>(max_k) + 2;
  auto basis = riemann_roch_basis(n, d, max_k);
  const std::size_t M = basis.size();

  // y = s(t) near P with t = x - a; y^j for j < d.
  TruncatedSeries s = series_dth_root(curve.f(), d, P.x, P.y, N);
  std::vector<std::vector<T>> y_pow(static_cast<std::size_t>(d));
  {
    TruncatedSeries acc = TruncatedSeries::from_poly(Poly::constant(curve.spec().one()), N);
    for (int j = 0; j < d; ++j) {
      for (std::size_t c = 0; c < N; ++c) y_pow[j].push_back(ops.from(acc[c]));
      acc = acc * s;
    }
  }
  const T a = ops.from(P.x);

  // x^i y^j = (a + t)^i y^j, built column by column as i grows.
  int max_i = 0;
  for (const auto& m : basis) max_i = std::max(max_i, m.i);
  std::vector<std::vector<std::vector<T>>> series(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    series[j].push_back(y_pow[j]);
    for (int i = 1; i <= max_i; ++i) {
      const auto& prev = series[j].back();
      std::vector<T> next(N, ops.zero());
      for (std::size_t c = 0; c < N; ++c) {
        next[c] = ops.mul(a, prev[c]);
        if (c > 0) next[c] = ops.add(next[c], prev[c - 1]);
      }
      series[j].push_back(std::move(next));
    }
  }

  struct Row {
    std::vector<T> values;
    std::vector<T> combo;
    std::size_t valuation;
    int pole;
  };
  std::vector<Row> rows;
  std::vector<int> pivot(N, -1);

  for (std::size_t idx = 0; idx < M; ++idx) {
    const Monomial& m = basis[idx];
    std::vector<T> values = series[m.j][m.i];
    std::vector<T> combo(M, ops.zero());
    combo[idx] = ops.one();
    std::size_t pos = 0;
    for (; pos < N; ++pos) {
      if (Ops::is_zero(values[pos])) continue;
      if (pivot[pos] < 0) break;
      const Row& r = rows[static_cast<std::size_t>(pivot[pos])];
      T factor = values[pos];
      for (std::size_t c = pos; c < N; ++c)
        if (!Ops::is_zero(r.values[c])) values[c] = ops.sub(values[c], ops.mul(factor, r.values[c]));
      for (std::size_t c = 0; c < idx; ++c)
        if (!Ops::is_zero(r.combo[c])) combo[c] = ops.sub(combo[c], ops.mul(factor, r.combo[c]));
    }
    // A nonzero function with pole order k vanishes to order at most k.
    if (pos >= N || pos > static_cast<std::size_t>(m.pole))
      fail(ErrorKind::PrecisionExhausted, "series precision too low for monomial x^" + std::to_string(m.i) +
                                              " y^" + std::to_string(m.j));
    T scale = ops.inv(values[pos]);
    for (std::size_t c = pos; c < N; ++c) values[c] = ops.mul(values[c], scale);
    for (std::size_t c = 0; c <= idx; ++c) combo[c] = ops.mul(combo[c], scale);
    pivot[pos] = static_cast<int>(rows.size());
    rows.push_back({std::move(values), std::move(combo), pos, m.pole});
  }

  ClassOrder result;
  result.principal.assign(static_cast<std::size_t>(max_k) + 1, false);
  result.principal[0] = true;
  std::vector<int> row_at(static_cast<std::size_t>(max_k) + 1, -1);
  // Pivots are distinct, so the deepest vanishing in the span of poles <= k
  // is attained by a single row; k(P - O) is principal iff that row has
  // valuation = pole = k.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].valuation != static_cast<std::size_t>(rows[r].pole)) continue;
    result.principal[rows[r].valuation] = true;
    row_at[rows[r].valuation] = static_cast<int>(r);
  }
  for (int k = 1; k <= max_k; ++k) {
    if (!result.principal[static_cast<std::size_t>(k)]) continue;
    result.order = k;
    const Row& r = rows[static_cast<std::size_t>(row_at[static_cast<std::size_t>(k)])];
    for (std::size_t c = 0; c < M; ++c)
      if (!Ops::is_zero(r.combo[c])) result.witness.push_back({basis[c], ops.to_element(r.combo[c])});
    break;
  }
  return result;
}

void require_unramified(const SuperellipticCurve& curve, const AffinePoint& P, int max_k) {
  curve.point(P.x, P.y);
  if (P.y.is_zero()) fail(ErrorKind::RamifiedPoint, "y(P) = 0; use order_of_ramified");
  if (max_k < 1) fail(ErrorKind::BadParameters, "max_k must be positive");
}

}  // namespace

ClassOrder riemann_roch_order(const SuperellipticCurve& curve, const AffinePoint& P, int max_k) {
  if (max_k <= 0) max_k = 2 * curve.params().m0;
  require_unramified(curve, P, max_k);
  if (curve.spec().is_prime_field())
    return eliminate(ModOps{curve.spec(), static_cast<std::uint64_t>(curve.spec().p())}, curve, P, max_k);
  return eliminate(GenericOps{curve.spec()}, curve, P, max_k);
}

ClassOrder riemann_roch_order_reference(const SuperellipticCurve& curve, const AffinePoint& P, int max_k) {
  if (max_k <= 0) max_k = 2 * curve.params().m0;
  require_unramified(curve, P, max_k);
  return eliminate(GenericOps{curve.spec()}, curve, P, max_k);
}

FieldElement evaluate_witness(const std::vector<WitnessTerm>& h, const FieldElement& x, const FieldElement& y) {
  FieldElement total = x.spec().zero();
  for (const auto& term : h) total += term.coefficient * x.pow(term.monomial.i) * y.pow(term.monomial.j);
  return total;
}

int order_of_ramified(const SuperellipticCurve& curve, const AffinePoint& P) {
  curve.point(P.x, P.y);
  if (!P.y.is_zero()) fail(ErrorKind::NotRamified, "y(P) != 0");
  // f squarefree, so x - a is a simple factor and P is a simple branch point.
  if (derivative(curve.f())(P.x).is_zero()) fail(ErrorKind::SingularCurve, "f has a repeated root at x(P)");
  return curve.d();
}

void require_elliptic(const Poly& f) {
  if (f.is_zero() || f.deg() != 3) fail(ErrorKind::SingularCurve, "elliptic backend needs deg f = 3");
  if (f.spec().characteristic() == 2) fail(ErrorKind::SingularCurve, "y^2 = f(x) is singular in characteristic 2");
  if (!is_squarefree(f)) fail(ErrorKind::SingularCurve, "f has a repeated root");
}

EllipticPoint elliptic_negate(const EllipticPoint& P) {
  if (P.infinity) return P;
  return {false, P.x, -P.y};
}

EllipticPoint elliptic_add(const Poly& f, const EllipticPoint& P, const EllipticPoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  FieldElement slope = f.spec().zero();
  if (P.x == Q.x) {
    if (!(P.y == Q.y) || P.y.is_zero()) return EllipticPoint::zero(f.spec());
    slope = derivative(f)(P.x) / (f.spec().element(2) * P.y);
  } else {
    slope = (Q.y - P.y) / (Q.x - P.x);
  }
  // Third intersection of the line with y^2 = c3 x^3 + c2 x^2 + ...
  FieldElement x3 = (slope * slope - f.coeff(2)) / f.coeff(3) - P.x - Q.x;
  FieldElement y3 = -(slope * (x3 - P.x) + P.y);
  return {false, x3, y3};
}

EllipticPoint elliptic_multiply(const Poly& f, const EllipticPoint& P, std::int64_t m) {
  if (m < 0) return elliptic_multiply(f, elliptic_negate(P), -m);
  EllipticPoint result = EllipticPoint::zero(f.spec()), base = P;
  while (m > 0) {
    if (m & 1) result = elliptic_add(f, result, base);
    base = elliptic_add(f, base, base);
    m >>= 1;
  }
  return result;
}

std::optional<int> elliptic_order(const Poly& f, const AffinePoint& P, int max_m) {
  require_elliptic(f);
  if (!(P.y * P.y == f(P.x))) fail(ErrorKind::NotOnCurve, "point not on y^2 = f(x)");
  EllipticPoint start = EllipticPoint::affine(P), acc = start;
  for (int m = 1; m <= max_m; ++m) {
    if (acc.infinity) return m;
    acc = elliptic_add(f, acc, start);
  }
  return std::nullopt;
}

MumfordDivisor MumfordDivisor::identity(const FieldSpec& spec) {
  return {Poly::constant(spec.one()), Poly(spec)};
}

MumfordDivisor MumfordDivisor::from_point(const AffinePoint& P) {
  const FieldSpec& spec = P.x.spec();
  return {Poly(spec, {-P.x, spec.one()}), Poly::constant(P.y)};
}

void require_hyperelliptic(const Poly& f) {
  if (f.is_zero() || f.deg() % 2 == 0) fail(ErrorKind::SingularCurve, "Cantor backend needs deg f odd");
  if (f.spec().characteristic() == 2) fail(ErrorKind::SingularCurve, "y^2 = f(x) is singular in characteristic 2");
  if (!is_squarefree(f)) fail(ErrorKind::SingularCurve, "f has a repeated root");
}

bool is_valid_divisor(const Poly& f, const MumfordDivisor& D) {
  if (D.u.is_zero() || !D.u.leading().is_one()) return false;
  if (!D.v.is_zero() && D.v.deg() >= D.u.deg()) return false;
  return ((D.v * D.v - f) % D.u).is_zero();
}

MumfordDivisor cantor_reduce(const Poly& f, MumfordDivisor D) {
  const int genus = (f.deg() - 1) / 2;
  while (D.u.deg() > genus) {
    Poly u = exact_div(f - D.v * D.v, D.u).monic();
    Poly v = (-D.v) % u;
    D = {std::move(u), std::move(v)};
  }
  D.u = D.u.monic();
  D.v = D.v % D.u;
  return D;
}

MumfordDivisor cantor_add(const Poly& f, const MumfordDivisor& D1, const MumfordDivisor& D2) {
  auto e1 = extended_gcd(D1.u, D2.u);
  auto e2 = extended_gcd(e1.gcd, D1.v + D2.v);
  const Poly& g = e2.gcd;
  Poly s1 = e2.s * e1.s, s2 = e2.s * e1.t, s3 = e2.t;
  Poly u = exact_div(D1.u * D2.u, g * g);
  Poly v = exact_div(s1 * D1.u * D2.v + s2 * D2.u * D1.v + s3 * (D1.v * D2.v + f), g) % u;
  return cantor_reduce(f, {std::move(u), std::move(v)});
}

MumfordDivisor cantor_negate(const MumfordDivisor& D) { return {D.u, -D.v}; }

std::optional<int> cantor_order(const Poly& f, const MumfordDivisor& D, int max_m) {
  require_hyperelliptic(f);
  if (!is_valid_divisor(f, D)) fail(ErrorKind::NotOnCurve, "not a Mumford pair for this curve");
  MumfordDivisor acc = D;
  for (int m = 1; m <= max_m; ++m) {
    if (acc.is_identity()) return m;
    acc = cantor_add(f, acc, D);
  }
  return std::nullopt;
}

std::vector<AffinePoint> enumerate_points(const SuperellipticCurve& curve) {
  if (!curve.spec().is_prime_field()) fail(ErrorKind::UnsupportedField, "point enumeration needs a prime field");
  std::vector<AffinePoint> points;
  for (std::int64_t x = 0; x < curve.spec().p(); ++x)
    for (auto& P : curve.points_above(curve.spec().element(x))) points.push_back(std::move(P));
  return points;
}

}  // namespace torsion
