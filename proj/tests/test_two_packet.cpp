#include "doctest.h"
#include "support.hpp"

#include "torsion/error.hpp"
#include "torsion/oracle.hpp"
#include "torsion/two_packet.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

using namespace torsion;
using torsion::testing::Gen;

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

const std::vector<std::vector<std::size_t>> kPairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

bool contains(const std::vector<FieldElement>& sorted, const FieldElement& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

TEST_CASE("admissibility examples") {
  auto v = two_packet_admissible(5, 4);
  CHECK(v.status == Admissibility::Disallowed);
  CHECK(std::count(v.reasons.begin(), v.reasons.end(), "(iv)") == 1);
  CHECK(std::count(v.reasons.begin(), v.reasons.end(), "slack") == 1);
  CHECK(two_packet_admissible(7, 3).status == Admissibility::Allowed);
  CHECK(two_packet_admissible(9, 2).status == Admissibility::Exempt);
  CHECK(two_packet_admissible(13, 6).reasons.front() == "(i)");
  CHECK(kind_of([] { two_packet_admissible(4, 2); }) == ErrorKind::BadParameters);
}

TEST_CASE("admissibility matches the committed table") {
  std::ifstream in(TORSION_FIXTURE_DIR "/admissibility_table.txt");
  REQUIRE(in);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int n = 0, d = 0;
    std::string verdict;
    ss >> n >> d >> verdict;
    CAPTURE(line);
    CHECK(to_string(two_packet_admissible(n, d).status) == verdict);
    ++rows;
  }
  int expected = 0;
  for (int n = 3; n <= 12; ++n)
    for (int d = 2; d < n; ++d)
      if (std::gcd(n, d) == 1) ++expected;
  CHECK(rows == expected);
}

TEST_CASE("fermat identity and wronskians") {
  FieldSpec Q = FieldSpec::rationals();
  auto one = Poly::constant(Q.one()), zero = Poly(Q), x = Poly::x(Q);
  auto c = fermat_identity_check(one, zero, zero, 2);
  CHECK(c.is_constant);
  CHECK(*c.value == Q.one());
  CHECK_FALSE(fermat_identity_check(x, zero, zero, 2).is_constant);

  CHECK(wronskian3(one, x, x * x) == Poly::constant(Q.element(2)));
  auto g = Poly::from_ints(Q, {1, 2, 3}), h = Poly::from_ints(Q, {0, 1, 0, 5});
  CHECK(wronskian3(g, g, h).is_zero());
  CHECK(kind_of([&] { wronskian_degree_audit(one, one, x, 2, 2); }) == ErrorKind::LinearlyDependent);

  auto a2 = wronskian_degree_audit(one + x, x * x, x * x * x, 2, 2);
  CHECK(a2.lower == 0);
  CHECK(a2.upper == 5);
  auto a3 = wronskian_degree_audit(one + x, x * x + one, x * x, 3, 2);
  CHECK(a3.lower == 6);
  CHECK(a3.upper == 9);
  CHECK(a3.ell_d6);
  for (int l0 = 1; l0 < 6; ++l0) CHECK_FALSE(wronskian_degree_audit(one + x, x * x + one, x * x, 6, l0).ell_d6);
}

TEST_CASE("build_H") {
  FieldSpec F13 = FieldSpec::prime(13);
  CHECK(build_H({}, F13.one()).H == Poly::constant(F13.one()));
  auto h = build_H({F13.element(5), F13.element(8)}, F13.one());
  CHECK(h.H == Poly::from_ints(F13, {1, 2, 2}));
  CHECK(h.degenerate.empty());
  auto deg = build_H({F13.one(), F13.element(5)}, F13.one());
  CHECK(deg.degenerate == std::vector<std::size_t>{0});
  CHECK(deg.H.deg() == 1);
  CHECK(roots_of_unity(F13, 4)[1] == F13.element(5));
  CHECK(select_roots(F13, 3, {1, 3}) == std::vector<FieldElement>{F13.element(5), F13.element(8)});
  CHECK(kind_of([&] { select_roots(FieldSpec::prime(7), 3, {0, 1}); }) == ErrorKind::NoRootOfUnityStructure);
  CHECK(kind_of([&] { select_roots(F13, 3, {1, 1}); }) == ErrorKind::BadParameters);
}

TEST_CASE("general two-packet family over F13") {
  FieldSpec F = FieldSpec::prime(13);
  // C^4 = 9 with A1 = 9, A2 = 1; lambda = 3 gives a monic u~ and a cubic f.
  auto fam = build_two_packet_general(F, 3, {0, 1}, F.element(3), F.element(9), F.one());
  CHECK(fam.identity_holds());
  CHECK(fam.factorization_holds());
  CHECK(fam.f.deg() == 3);
  CHECK_FALSE(fam.twisted);
  auto pts = packet_points(fam);
  REQUIRE(pts.size() == 4);
  for (const auto& P : pts) {
    CHECK(elliptic_order(fam.f, P, 20) == std::optional<int>(4));
    CHECK(cantor_order(fam.f, P, 20) == std::optional<int>(4));
  }

  // For generic lambda the leading coefficient of u~ is not +-1 and f is a quartic.
  auto draft = draft_two_packet_general(F, 3, {0, 1}, F.element(5), F.element(9), F.one());
  CHECK(draft.identity_holds());
  CHECK(draft.factorization_holds());
  CHECK(draft.f.deg() == 4);
  CHECK(kind_of([&] { build_two_packet_general(F, 3, {0, 1}, F.element(5), F.element(9), F.one()); }) ==
        ErrorKind::WrongDegree);
  CHECK(kind_of([&] { build_two_packet_general(F, 3, {0, 1}, F.one(), F.one(), F.one()); }) ==
        ErrorKind::BadParameters);
  CHECK(kind_of([&] { build_two_packet_general(F, 3, {0, 1}, F.one(), F.element(2), F.one()); }) ==
        ErrorKind::NoRootOfUnityStructure);
  CHECK(kind_of([&] { build_two_packet_general(F, 4, {0, 1}, F.one(), F.element(9), F.one()); }) ==
        ErrorKind::BadParameters);
}

TEST_CASE("twisted fallback keeps both representations") {
  // A2 a non-residue, so A1 = c^4 A2 is one too and neither square root exists.
  FieldSpec F = FieldSpec::prime(29);
  FieldElement A2 = F.element(2);  // 2 is a non-residue mod 29
  REQUIRE_FALSE(nth_root(A2, 2));
  FieldElement A1;
  for (std::int64_t k = 1; k < 29; ++k) {
    FieldElement c = F.element(k);
    if (!(c.pow(4) * A2 == A2)) {
      A1 = c.pow(4) * A2;
      break;
    }
  }
  auto draft = draft_two_packet_general(F, 3, {0, 2}, F.element(3), A1, A2);
  CHECK(draft.twisted);
  CHECK(draft.A1.is_one());
  CHECK(draft.identity_holds());
  CHECK(draft.factorization_holds());
}

TEST_CASE("equal two-packet family") {
  FieldSpec F = FieldSpec::prime(13);
  CHECK(kind_of([&] { build_two_packet_equal(F, 3, {0, 1}, F.one(), PacketCase::C1_5); }) == ErrorKind::ExcludedLambda);
  CHECK(kind_of([&] { build_two_packet_equal(F, 3, {0, 1}, -F.one(), PacketCase::C1_6); }) ==
        ErrorKind::ExcludedLambda);
  for (auto pc : {PacketCase::C1_5, PacketCase::C1_6})
    for (const auto& I : kPairs)
      for (std::int64_t k = 2; k < 12; ++k) {
        auto d = draft_two_packet_equal(F, 3, I, F.element(k), pc);
        CHECK(d.identity_holds());
        CHECK(d.factorization_holds());
        int a = (d.v_tilde - d.u_tilde).deg(), b = (d.v_tilde + d.u_tilde).deg();
        CHECK(a + b == 3);
        CHECK(std::min(a, b) == 1);
      }
  auto fam = build_two_packet_equal(F, 3, {0, 1}, F.element(6), PacketCase::C1_5);
  for (const auto& P : packet_points(fam)) CHECK(cantor_order(fam.f, P, 20) == std::optional<int>(4));
}

TEST_CASE("equal case over F5 has no cubic squarefree member") {
  // Every draft is a quartic or has a repeated root.
  FieldSpec F = FieldSpec::prime(5);
  for (auto pc : {PacketCase::C1_5, PacketCase::C1_6})
    for (const auto& I : kPairs)
      for (std::int64_t k : {2, 3}) {
        auto d = draft_two_packet_equal(F, 3, I, F.element(k), pc);
        CHECK((d.f.deg() == 4 || !is_squarefree(d.f)));
      }
}

TEST_CASE("example with m0 = n + 1") {
  FieldSpec Q = FieldSpec::rationals();
  auto ex = example_m0_equals_nplus1(3, 2, Q);
  CHECK(ex.curve.f() == Poly::from_ints(Q, {1, 4, 6, 4}));
  CHECK(ex.points.size() == 2);
  for (const auto& P : ex.points) {
    CHECK(P.x.is_zero());
    CHECK(elliptic_order(ex.curve.f(), P, 10) == std::optional<int>(4));
  }
  CHECK_FALSE(ex.gamma);

  FieldSpec F5 = FieldSpec::prime(5);
  auto ex5 = example_m0_equals_nplus1(3, 2, F5);
  CHECK(ex5.curve.contains(F5.element(4), F5.element(2)));
  CHECK(ex5.curve.contains(F5.element(4), F5.element(3)));
  REQUIRE(ex5.u);
  CHECK(Poly::monomial(ex5.A1, 4) - *ex5.u * *ex5.u == ex5.curve.f());
  CHECK(Poly::from_ints(F5, {1, 1}).pow(4) * ex5.A2 - ex5.v * ex5.v == ex5.curve.f());
  for (const auto& P : ex5.points) CHECK(elliptic_order(ex5.curve.f(), P, 10) == std::optional<int>(4));
  CHECK(ex5.points.size() == 4);

  CHECK(kind_of([] { example_m0_equals_nplus1(3, 2, FieldSpec::prime(2)); }) == ErrorKind::CharDividesM0);
  CHECK(kind_of([] { example_m0_equals_nplus1(4, 3, FieldSpec::rationals()); }) == ErrorKind::BadParameters);
}

TEST_CASE("bad lambda set is complete over F13 and F29") {
  for (std::int64_t p : {13, 29}) {
    FieldSpec F = FieldSpec::prime(p);
    int confirmed = 0;
    for (std::int64_t c = 1; c < p; ++c) {
      FieldElement C = F.element(c);
      if (c != 1 && C.pow(4).is_one()) continue;
      for (const auto& I : kPairs) {
        auto rep = bad_lambda_set(F, 3, I, C);
        CHECK(contains(rep.candidates, F.one()));
        CHECK(contains(rep.candidates, -F.one()));
        for (const auto& lam : confirmed_bad_lambdas(F, 3, I, C)) {
          CHECK(contains(rep.candidates, lam));
          ++confirmed;
        }
      }
    }
    CHECK(confirmed > 0);
  }
}

TEST_CASE("as-printed exclusion polynomial misses bad lambdas") {
  // C = 1, I = {1, mu_1}: lambda = 5 gives a double root at x = -1.
  FieldSpec F = FieldSpec::prime(13);
  auto printed = bad_lambda_set(F, 3, {0, 1}, F.one(), true);
  auto fixed = bad_lambda_set(F, 3, {0, 1}, F.one());
  CHECK_FALSE(is_squarefree(finite_polynomial(F, 3, {0, 1}, F.one(), F.element(5))));
  CHECK_FALSE(contains(printed.candidates, F.element(5)));
  CHECK(contains(fixed.candidates, F.element(5)));
  CHECK(fixed.mult10(-F.one()).is_zero());
}

TEST_CASE("property: the printed exclusion polynomial never vanishes") {
  // The parity argument: x^n exactly divides the first term, an even power the second.
  Gen gen(0x5eed0501);
  struct Field {
    std::int64_t p;
    int n;
  };
  const std::vector<Field> fields{{13, 3}, {13, 5}, {17, 7}, {29, 3}, {37, 5}};
  for (int trial = 0; trial < 100; ++trial) {
    auto fld = fields[static_cast<std::size_t>(gen.range(0, 4))];
    FieldSpec F = FieldSpec::prime(fld.p);
    std::vector<std::size_t> idx(static_cast<std::size_t>(fld.n + 1));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), gen.engine());
    idx.resize(static_cast<std::size_t>((fld.n + 1) / 2));
    FieldElement C = gen.nonzero(F);
    CHECK_FALSE(bad_lambda_set(F, fld.n, idx, C, true).mult10.is_zero());
  }
}

TEST_CASE("corrected exclusion polynomial vanishes on cosets of mu_ell0") {
  FieldSpec F = FieldSpec::prime(13);
  // mu_6 order 1, 4, 3, 12, 9, 10: positions {0, 2, 4} are mu_3.
  auto rep = bad_lambda_set(F, 5, {0, 2, 4}, F.element(2));
  CHECK(rep.mult10_vanishes);
  for (const auto& lam : confirmed_bad_lambdas(F, 5, {0, 2, 4}, F.element(2))) CHECK(contains(rep.candidates, lam));
  CHECK_FALSE(bad_lambda_set(F, 5, {0, 1, 2}, F.element(2)).mult10_vanishes);
}

TEST_CASE("property: ell0 H_I - x H_I' is nonzero") {
  Gen gen(0x5eed0502);
  struct Field {
    std::int64_t p;
    int n;
  };
  const std::vector<Field> fields{{13, 3}, {13, 5}, {13, 11}, {17, 7}, {29, 3}, {41, 9}, {37, 11}};
  for (int trial = 0; trial < 200; ++trial) {
    auto fld = fields[static_cast<std::size_t>(gen.range(0, static_cast<std::int64_t>(fields.size()) - 1))];
    FieldSpec F = FieldSpec::prime(fld.p);
    std::vector<std::size_t> idx(static_cast<std::size_t>(fld.n + 1));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), gen.engine());
    idx.resize(static_cast<std::size_t>((fld.n + 1) / 2));
    auto rep = bad_lambda_set(F, fld.n, idx, gen.nonzero(F));
    CHECK_FALSE(rep.L_I.is_zero());
    CHECK_FALSE(rep.L_co.is_zero());
  }
}

TEST_CASE("wronskian identities on built families") {
  FieldSpec F = FieldSpec::prime(13);
  std::vector<PacketFamily> fams;
  for (const auto& I : kPairs)
    for (std::int64_t k = 2; k < 12; ++k) {
      try {
        fams.push_back(build_two_packet_equal(F, 3, I, F.element(k), PacketCase::C1_6));
      } catch (const Error&) {
      }
      try {
        fams.push_back(build_two_packet_general(F, 3, I, F.element(k), F.element(9), F.one()));
      } catch (const Error&) {
      }
    }
  REQUIRE(fams.size() >= 8);
  for (const auto& fam : fams) {
    auto t = fermat_triple(fam);
    REQUIRE(t);
    auto fc = fermat_identity_check(t->f1, t->f2, t->f3, 2);
    CHECK(fc.is_constant);
    CHECK(*fc.value == fam.A1);
    auto audit = wronskian_degree_audit(t->f1, t->f2, t->f3, 2, fam.ell0);
    Poly g1 = t->f1.pow(2), g2 = t->f2.pow(2);
    // The third column collapses to the constant A1.
    CHECK(audit.W == (derivative(g1) * derivative(derivative(g2)) - derivative(g2) * derivative(derivative(g1))) * fam.A1);
    CHECK(audit.in_window());
  }
}

TEST_CASE("shift points to 0 and -1") {
  FieldSpec F = FieldSpec::prime(13);
  auto fam = build_two_packet_general(F, 3, {0, 1}, F.element(3), F.element(9), F.one());
  SuperellipticCurve curve(2, fam.f);
  auto pts = packet_points(fam);
  auto same = shift_points_to_0_minus1(curve, pts.front(), pts.back());
  CHECK(same.lambda.is_one());
  CHECK(same.mu.is_zero());
  CHECK(same.curve.f() == fam.f);

  // Move (0, y0) and (-1, y1) somewhere else, then back.
  FieldElement a = F.element(4), b = F.element(7);
  Poly moved = fam.f.compose(Poly(F, {-a * (a - b).inv(), (a - b).inv()}));
  SuperellipticCurve mc(2, moved);
  auto above_a = mc.points_above(a), above_b = mc.points_above(b);
  REQUIRE(!above_a.empty());
  REQUIRE(!above_b.empty());
  auto s = shift_points_to_0_minus1(mc, above_a.front(), above_b.front());
  CHECK(s.lambda == a - b);
  if (!s.needs_extension) {
    REQUIRE(s.P_image);
    CHECK(s.curve.contains(s.P_image->x, s.P_image->y));
    CHECK(s.curve.contains(s.Q_image->x, s.Q_image->y));
    CHECK(s.P_image->x.is_zero());
    CHECK(s.Q_image->x == -F.one());
    CHECK(cantor_order(s.curve.f(), *s.P_image, 30) == cantor_order(mc.f(), above_a.front(), 30));
    CHECK(cantor_order(s.curve.f(), *s.Q_image, 30) == cantor_order(mc.f(), above_b.front(), 30));
  }
  CHECK(kind_of([&] { shift_points_to_0_minus1(curve, pts[0], pts[1]); }) == ErrorKind::SameAbscissa);
}

TEST_CASE("property: shifting preserves orders") {
  Gen gen(0x5eed0503);
  int checked = 0;
  for (std::int64_t p : {11, 13, 17, 19}) {
    FieldSpec F = FieldSpec::prime(p);
    for (int trial = 0; trial < 20; ++trial) {
      Poly f = gen.poly(F, 3);
      if (!is_squarefree(f)) continue;
      SuperellipticCurve c(2, f);
      auto pts = enumerate_points(c);
      if (pts.size() < 2) continue;
      AffinePoint P = pts[static_cast<std::size_t>(gen.range(0, static_cast<std::int64_t>(pts.size()) - 1))];
      AffinePoint Q = pts[static_cast<std::size_t>(gen.range(0, static_cast<std::int64_t>(pts.size()) - 1))];
      if (P.x == Q.x) continue;
      auto s = shift_points_to_0_minus1(c, P, Q);
      if (s.needs_extension) continue;
      CHECK(s.curve.f().deg() == 3);
      CHECK(elliptic_order(s.curve.f(), *s.P_image, 64) == elliptic_order(f, P, 64));
      CHECK(elliptic_order(s.curve.f(), *s.Q_image, 64) == elliptic_order(f, Q, 64));
      ++checked;
    }
  }
  CHECK(checked >= 10);
}
