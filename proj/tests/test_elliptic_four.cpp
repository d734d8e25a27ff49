#include "doctest.h"
#include "support.hpp"

#include "torsion/elliptic_four.hpp"
#include "torsion/error.hpp"
#include "torsion/oracle.hpp"

using namespace torsion;
using torsion::testing::Gen;
using torsion::testing::q;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::SchemaViolation;
}

}  // namespace

TEST_CASE("build the family") {
  FieldSpec Q = FieldSpec::rationals();
  auto fam = build_family(Q.one(), Q.one());
  CHECK(fam.f == Poly::from_ints(Q, {1, 2, 3, 2}));
  CHECK(kind_of([&] { build_family(Q.element(2), Q.element(4)); }) == ErrorKind::Degenerate);
  CHECK(kind_of([&] { build_family(Q.one(), Q.zero()); }) == ErrorKind::ZeroParameter);
  FieldSpec F3 = FieldSpec::prime(3);
  CHECK_NOTHROW(build_family(F3.one(), F3.element(2)));
  CHECK(kind_of([] { build_family(FieldSpec::prime(2).one(), FieldSpec::prime(2).one()); }) == ErrorKind::CharTwo);
}

TEST_CASE("order structure over Q and F5") {
  FieldSpec Q = FieldSpec::rationals(), F5 = FieldSpec::prime(5);
  auto report = check_order_structure(build_family(Q.one(), Q.one()));
  CHECK(report.all_passed());
  auto doubled = elliptic_multiply(Poly::from_ints(Q, {1, 2, 3, 2}), EllipticPoint::affine({Q.zero(), Q.one()}), 2);
  CHECK(doubled == EllipticPoint::affine({Q.element(-1), Q.zero()}));
  CHECK(check_order_structure(build_family(F5.one(), F5.one())).all_passed());
}

TEST_CASE("from_kubert") {
  FieldSpec Q = FieldSpec::rationals();
  auto k = from_kubert(Q.element(-2));
  CHECK(k.family.B == Q.one());
  CHECK(k.family.B1 == q(Q, "1/2"));
  CHECK(k.map_verified);
  CHECK(k.to_family.apply({Q.zero(), Q.zero()}) == AffinePoint{Q.zero(), Q.one()});
  CHECK(kind_of([&] { from_kubert(q(Q, "-1/16")); }) == ErrorKind::DegenerateB);
  CHECK(kind_of([&] { from_kubert(Q.zero()); }) == ErrorKind::DegenerateB);
}

TEST_CASE("to_kubert") {
  FieldSpec Q = FieldSpec::rationals();
  auto r = to_kubert(build_family(Q.one(), q(Q, "1/2")));
  CHECK(r.b == Q.element(-2));
  CHECK(r.agree());

  auto fam = build_family(Q.one(), Q.one());
  auto red = to_kubert(fam);
  CHECK(red.b == q(Q, "-1/2"));
  CHECK(red.closed_form == Poly::from_ints(Q, {16, 16, 12, 4}));
  CHECK(red.agree());
  auto back = from_kubert(red.b).family;
  CHECK(back.B == Q.element(4));
  CHECK(back.B1 == Q.element(2));
  // The round trip lands on x -> 2x of the original.
  auto t = scaling_isomorphism(fam, back);
  REQUIRE(t);
  CHECK(*t == Q.element(2));
}

TEST_CASE("property: the Kubert map sends Kubert points to family points") {
  // Enumerate E(b,0)(F_p) by brute force and push through the map.
  Gen gen(0x5eed0401);
  for (std::int64_t p : {7, 11, 13, 17}) {
    FieldSpec F = FieldSpec::prime(p);
    for (int trial = 0; trial < 5; ++trial) {
      FieldElement b = gen.nonzero(F);
      if ((F.one() + F.element(16) * b).is_zero()) continue;
      auto k = from_kubert(b);
      CHECK(k.map_verified);
      BivariatePoly K = kubert_equation(b);
      for (std::int64_t xs = 0; xs < p; ++xs)
        for (std::int64_t ys = 0; ys < p; ++ys) {
          AffinePoint P{F.element(xs), F.element(ys)};
          if (!K(P.x, P.y).is_zero()) continue;
          AffinePoint image = k.to_family.apply(P);
          CHECK(image.y * image.y == k.family.f(image.x));
          CHECK(k.from_family.apply(image) == P);
        }
      CHECK(elliptic_order(k.family.f, k.to_family.apply({F.zero(), F.zero()}), 10) == std::optional<int>(4));
    }
  }
}

TEST_CASE("property: order 4 and 2 Q0 = Q2 for random parameters") {
  Gen gen(0x5eed0402);
  for (auto spec : {FieldSpec::rationals(), FieldSpec::prime(7), FieldSpec::prime(11), FieldSpec::prime(101)}) {
    int built = 0;
    while (built < 25) {
      FieldElement B = gen.nonzero(spec), B1 = gen.nonzero(spec);
      if (B1 * B1 == spec.element(8) * B) continue;
      auto fam = build_family(B, B1);
      CHECK(fam.f == Poly(spec, {spec.one(), spec.element(2) * B1, spec.element(2) * B + B1 * B1,
                                 spec.element(2) * B * B1}));
      CHECK(fam.f(fam.Q2.x).is_zero());
      CHECK(check_order_structure(fam).all_passed());
      ++built;
    }
  }
}

TEST_CASE("property: reduction chains agree and round trips are isomorphisms") {
  Gen gen(0x5eed0403);
  FieldSpec Q = FieldSpec::rationals();
  int built = 0;
  while (built < 50) {
    FieldElement B = gen.nonzero(Q), B1 = gen.nonzero(Q);
    if (B1 * B1 == Q.element(8) * B) continue;
    auto fam = build_family(B, B1);
    auto red = to_kubert(fam);
    CHECK(red.agree());
    auto back = from_kubert(red.b);
    CHECK(back.map_verified);
    CHECK(to_kubert(back.family).b == red.b);
    auto t = scaling_isomorphism(fam, back.family);
    REQUIRE(t);
    CHECK(*t == Q.element(2) * B1 / B);
    // Exact parameter identity on the image of from_kubert, B = 2 B1.
    if (B1 == Q.element(16)) continue;
    auto canonical = build_family(Q.element(2) * B1, B1);
    auto again = from_kubert(to_kubert(canonical).b).family;
    CHECK(again.B == canonical.B);
    CHECK(again.B1 == canonical.B1);
    ++built;
  }
}
