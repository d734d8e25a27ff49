// One line per acceptance criterion. Exit status is 0 iff the set of failing
// criteria equals the --expect-fail list (empty by default).

#include "support.hpp"

#include "torsion/certificate.hpp"
#include "torsion/elliptic_four.hpp"
#include "torsion/error.hpp"
#include "torsion/oracle.hpp"
#include "torsion/sweep.hpp"
#include "torsion/two_packet.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using namespace torsion;
using torsion::testing::Gen;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what + (detail.empty() ? "" : "; " + detail);
    passed = passed && ok;
  }
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

Outcome equal0_orders() {
  Outcome o;
  struct Case {
    int n, d;
    FieldSpec spec;
    int m0;
  };
  const std::vector<Case> cases{{4, 3, FieldSpec::rationals(), 6},
                                {4, 3, FieldSpec::prime(7), 6},
                                {8, 5, FieldSpec::prime(11), 10}};
  std::vector<std::string> seen;
  for (const auto& c : cases) {
    auto cert = family_equal0(c.n, c.d, c.spec);
    SuperellipticCurve curve(c.d, cert.f);
    auto order = order_of_class(curve, cert.point(), 2 * c.m0);
    std::string tag = "(" + std::to_string(c.n) + "," + std::to_string(c.d) + ")/" + c.spec.to_string();
    o.require(is_squarefree(cert.f), tag + " f0 not squarefree");
    o.require(cert.m0 == c.m0 && order == c.m0, tag + " order " + (order ? std::to_string(*order) : "none"));
    seen.push_back(tag + " order " + (order ? std::to_string(*order) : "none"));
  }
  if (o.passed) o.detail = join(seen);
  return o;
}

Outcome equal1_elliptic() {
  Outcome o;
  Gen gen(0xacc0002);
  FieldSpec Q = FieldSpec::rationals();
  int done = 0;
  while (done < 25) {
    FieldElement B = gen.nonzero(Q), B1 = gen.nonzero(Q);
    if (B1 * B1 == Q.element(8) * B) continue;
    auto fam = family_equal1(3, 2, B, B1);
    Poly expected = Poly(Q, {Q.one(), B1, Q.element(2) * B}) * Poly(Q, {Q.one(), B1});
    AffinePoint P{Q.zero(), Q.one()};
    AffinePoint T{-B1.inv(), Q.zero()};
    auto twoP = elliptic_add(fam.certificate.f, EllipticPoint::affine(P), EllipticPoint::affine(P));
    std::string tag = "B=" + B.to_string() + " B1=" + B1.to_string();
    o.require(fam.certificate.f == expected, tag + ": f differs");
    o.require(elliptic_order(fam.certificate.f, P, 12) == 4, tag + ": order of (0,1)");
    o.require(twoP == EllipticPoint::affine(T), tag + ": 2(0,1) != (-1/B1,0)");
    o.require(elliptic_order(fam.certificate.f, T, 12) == 2, tag + ": order of (-1/B1,0)");
    o.require(fam.order_d_point == T, tag + ": order-d point");
    ++done;
  }
  if (o.passed) o.detail = "25 random (B,B1) over Q";
  return o;
}

Outcome kubert_round_trips() {
  Outcome o;
  Gen gen(0xacc0003);
  FieldSpec Q = FieldSpec::rationals();
  int b_trips = 0, param_trips = 0, iso = 0;
  while (b_trips < 25) {
    FieldElement b = gen.nonzero(Q);
    if ((Q.one() + Q.element(16) * b).is_zero()) continue;
    auto k = from_kubert(b);
    auto red = to_kubert(k.family);
    AffinePoint image = k.to_family.apply({Q.zero(), Q.zero()});
    o.require(k.map_verified, "map not verified for b=" + b.to_string());
    o.require(red.b == b, "to_kubert(from_kubert(b)) != b for b=" + b.to_string());
    o.require(red.agree(), "reduction chains differ for b=" + b.to_string());
    o.require(elliptic_order(k.family.f, image, 12) == 4, "Kubert (0,0) image not of order 4 for b=" + b.to_string());
    ++b_trips;
  }
  while (param_trips < 25) {
    // from_kubert lands on B = 2 B1; there the composite is the identity.
    FieldElement B1 = gen.nonzero(Q);
    if (B1 == Q.element(16)) continue;
    auto fam = build_family(Q.element(2) * B1, B1);
    auto red = to_kubert(fam);
    auto back = from_kubert(red.b).family;
    o.require(red.agree(), "reduction chains differ for B1=" + B1.to_string());
    o.require(back.B == fam.B && back.B1 == fam.B1, "from_kubert(to_kubert) moved B1=" + B1.to_string());
    ++param_trips;
  }
  while (iso < 25) {
    // Off that slice the composite returns an isomorphic member.
    FieldElement B = gen.nonzero(Q), B1 = gen.nonzero(Q);
    if (B1 * B1 == Q.element(8) * B) continue;
    auto fam = build_family(B, B1);
    auto red = to_kubert(fam);
    o.require(red.agree(), "reduction chains differ");
    o.require(scaling_isomorphism(fam, from_kubert(red.b).family).has_value(), "no scaling isomorphism");
    ++iso;
  }
  if (o.passed) o.detail = "25 b exact, 25 (2B1,B1) exact, 25 general (B,B1) up to x -> tx";
  return o;
}

Outcome admissibility_table() {
  Outcome o;
  std::ifstream in(TORSION_FIXTURE_DIR "/admissibility_table.txt");
  o.require(static_cast<bool>(in), "fixture missing");
  std::string line;
  int rows = 0;
  std::set<std::pair<int, int>> listed;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int n = 0, d = 0;
    std::string verdict;
    ss >> n >> d >> verdict;
    listed.insert({n, d});
    o.require(to_string(two_packet_admissible(n, d).status) == verdict, "row '" + line + "' differs");
    ++rows;
  }
  std::map<int, std::vector<int>> allowed;
  std::vector<std::string> exempt_d6;
  for (int n = 3; n <= 12; ++n)
    for (int d = 2; d < n; ++d) {
      if (std::gcd(n, d) != 1) continue;
      o.require(listed.count({n, d}) == 1, "fixture lacks (" + std::to_string(n) + "," + std::to_string(d) + ")");
      auto v = two_packet_admissible(n, d);
      if (d == 6) {
        o.require(!v.allowed, "d = 6 allowed for n = " + std::to_string(n));
        // m0 = n + 1 is not covered by the conditions, so no item is cited there.
        if (v.status == Admissibility::Exempt)
          exempt_d6.push_back("(" + std::to_string(n) + ",6)");
        else
          o.require(std::count(v.reasons.begin(), v.reasons.end(), "(i)") == 1, "d = 6 not excluded by (i)");
      }
      if (n == 5 || n == 6) o.require(!v.allowed, "n = " + std::to_string(n) + " has an allowed d");
      if (v.allowed) allowed[n].push_back(d);
    }
  o.require(allowed[7] == std::vector<int>{3}, "n = 7 does not allow exactly d = 3");
  o.require(allowed[4] == std::vector<int>{3}, "n = 4 does not allow exactly d = 3");
  o.require(allowed[9] == std::vector<int>{4}, "n = 9 does not allow exactly d = 4");
  if (o.passed)
    o.detail = std::to_string(rows) + " fixture rows, 0 mismatches; d = 6 excluded by (i) except " + join(exempt_d6) +
               " (m0 = n + 1, exempt)";
  return o;
}

std::vector<PacketConfig> criterion_configs(const FieldSpec& F) {
  // Equal case with both signs, and the general case with A2 = 1 and A1 a
  // fourth power other than 1 (3 and 9 over F13).
  std::vector<PacketConfig> configs{{PacketCase::C1_5, F.one(), F.one()}, {PacketCase::C1_6, F.one(), F.one()}};
  std::set<std::uint64_t> powers;
  for (std::int64_t k = 1; k < F.p(); ++k) powers.insert(F.element(k).pow(4).residue());
  for (auto r : powers)
    if (r != 1) configs.push_back({PacketCase::General, F.element(static_cast<std::int64_t>(r)), F.one()});
  return configs;
}

struct Criterion5Data {
  std::vector<PacketRecord> records;
};

Outcome two_packet_oracle(Criterion5Data& data) {
  Outcome o;
  FieldSpec F = FieldSpec::prime(13);
  data.records = sweep_two_packet(F, 3, criterion_configs(F));
  int outside = 0, built = 0, verified = 0;
  std::map<std::string, int> failures;
  for (const auto& r : data.records) {
    if (r.candidate_bad) continue;
    ++outside;
    if (!r.family) {
      failures[r.status]++;
      continue;
    }
    ++built;
    auto pts = packet_points(*r.family);
    bool ok = is_squarefree(r.family->f) && pts.size() == 4;
    for (const auto& P : pts) {
      auto e = elliptic_order(r.family->f, P, 20);
      auto c = cantor_order(r.family->f, P, 20);
      ok = ok && e == 4 && c == 4;
    }
    verified += ok;
  }
  std::string fails;
  for (const auto& [k, v] : failures) fails += " " + k + "=" + std::to_string(v);
  o.require(built == outside, std::to_string(outside - built) + " of " + std::to_string(outside) +
                                  " (I, lambda, config) outside the bad set do not build:" + fails);
  o.require(verified == built, std::to_string(built - verified) + " built families fail the oracles");

  FieldSpec Q = FieldSpec::rationals();
  Poly f = Poly::from_ints(Q, {1, 4, 6, 4});
  SuperellipticCurve curve(2, f);
  for (const auto& y : {Q.one(), -Q.one()}) {
    AffinePoint P{Q.zero(), y};
    bool ok = elliptic_order(f, P, 20) == 4 && cantor_order(f, P, 20) == 4 && order_of_class(curve, P, 8) == 4;
    o.require(ok, "Q instance (0," + y.to_string() + ") not of order 4");
  }
  std::string summary = std::to_string(built) + "/" + std::to_string(outside) + " built, " +
                        std::to_string(verified) + " pass both oracles; Q instance order 4";
  o.detail = o.passed ? summary : o.detail + " [" + summary + "]";
  return o;
}

Outcome bad_lambda_containment() {
  Outcome o;
  int confirmed = 0, contained = 0;
  for (std::int64_t p : {13, 29}) {
    FieldSpec F = FieldSpec::prime(p);
    std::vector<FieldElement> Cs;
    for (std::int64_t c = 1; c < p; ++c)
      if (c == 1 || !F.element(c).pow(4).is_one()) Cs.push_back(F.element(c));
    for (const auto& rec : containment_sweep(F, 3, Cs)) {
      confirmed += static_cast<int>(rec.confirmed.size());
      for (const auto& l : rec.confirmed)
        contained += std::binary_search(rec.candidates.begin(), rec.candidates.end(), l);
    }
  }
  o.require(contained == confirmed, "containment " + std::to_string(contained) + "/" + std::to_string(confirmed));
  std::ostringstream ratio;
  ratio << "containment " << contained << "/" << confirmed << " = "
        << (confirmed ? 100.0 * contained / confirmed : 100.0) << "% over F13, F29 (n = 3, every I and C)";
  if (o.passed) o.detail = ratio.str();
  return o;
}

Outcome wronskian_identities(const Criterion5Data& data) {
  Outcome o;
  int families = 0;
  for (const auto& r : data.records) {
    if (!r.family) continue;
    const PacketFamily& fam = *r.family;
    auto t = fermat_triple(fam);
    o.require(t.has_value(), "no Fermat triple");
    if (!t) continue;
    const int d = 2;
    Poly g1 = t->f1.pow(d), g2 = t->f2.pow(d), g3 = t->f3.pow(d);
    auto fc = fermat_identity_check(t->f1, t->f2, t->f3, d);
    o.require(fc.is_constant && fc.value == fam.A1, "f1^2 + f2^2 + f3^2 is not A1");
    Poly W = wronskian3(g1, g2, g3);
    Poly collapsed = (derivative(g1) * derivative(derivative(g2)) - derivative(g2) * derivative(derivative(g1))) * fam.A1;
    o.require(W == collapsed, "collapsed Wronskian differs");
    Poly divisor = t->f1.pow(d - 2) * t->f2.pow(d - 2) * t->f3.pow(d - 2);
    o.require(!W.is_zero() && (W % divisor).is_zero(), "W not divisible by (f1 f2 f3)^(d-2)");
    auto audit = wronskian_degree_audit(t->f1, t->f2, t->f3, d, fam.ell0);
    o.require(audit.in_window(), "deg W outside [3 ell0 (d-2), 2 ell0 d - 3]");
    ++families;
  }
  o.require(families > 0, "no built families");

  Gen gen(0xacc0007);
  struct Field {
    std::int64_t p;
    int n;
  };
  const std::vector<Field> fields{{13, 3}, {13, 5}, {13, 11}, {17, 7}, {29, 3}, {41, 9}, {37, 11}, {31, 5}};
  int nonzero = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto fld = fields[static_cast<std::size_t>(gen.range(0, static_cast<std::int64_t>(fields.size()) - 1))];
    FieldSpec F = FieldSpec::prime(fld.p);
    std::vector<std::size_t> idx(static_cast<std::size_t>(fld.n + 1));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), gen.engine());
    idx.resize(static_cast<std::size_t>((fld.n + 1) / 2));
    std::sort(idx.begin(), idx.end());
    auto H = build_H(select_roots(F, fld.n, idx), gen.nonzero(F)).H;
    Poly L = H * F.element((fld.n + 1) / 2) - Poly::x(F) * derivative(H);
    nonzero += !L.is_zero();
  }
  o.require(nonzero == 200, "lem1 fails on " + std::to_string(200 - nonzero) + " draws");
  if (o.passed)
    o.detail = std::to_string(families) + " built families; lem1 nonzero on " + std::to_string(nonzero) + "/200 draws";
  return o;
}

std::vector<OracleInstance> random_instances(Gen& gen, const std::vector<std::int64_t>& primes, int n, int count) {
  std::vector<OracleInstance> out;
  while (static_cast<int>(out.size()) < count) {
    FieldSpec F = FieldSpec::prime(primes[static_cast<std::size_t>(gen.range(0, static_cast<std::int64_t>(primes.size()) - 1))]);
    Poly f = gen.poly(F, n);
    if (!is_squarefree(f)) continue;
    auto pts = enumerate_points(SuperellipticCurve(2, f));
    if (pts.empty()) continue;
    out.push_back({2, f, pts[static_cast<std::size_t>(gen.range(0, static_cast<std::int64_t>(pts.size()) - 1))]});
  }
  return out;
}

Outcome oracle_self_consistency() {
  Outcome o;
  Gen gen(0xacc0008);
  const std::vector<std::int64_t> genus1_primes{5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                                73, 79, 83, 89, 97};
  // Riemann-Roch on genus 2 costs about a second per instance at p = 31.
  const std::vector<std::int64_t> genus2_primes{5, 7, 11, 13, 17, 19, 23, 29, 31};
  auto g1 = random_instances(gen, genus1_primes, 3, 50);
  auto g2 = random_instances(gen, genus2_primes, 5, 20);
  auto r1 = oracle_consistency(g1);
  auto r2 = oracle_consistency(g2);
  int a1 = static_cast<int>(std::count_if(r1.begin(), r1.end(), [](const auto& a) { return a.agree; }));
  int a2 = static_cast<int>(std::count_if(r2.begin(), r2.end(), [](const auto& a) { return a.agree; }));
  o.require(a1 == 50, "genus 1 agreement " + std::to_string(a1) + "/50");
  o.require(a2 == 20, "genus 2 agreement " + std::to_string(a2) + "/20");

  int dims = 0;
  for (int n = 3; n <= 12; ++n)
    for (int d = 2; d < n; ++d) {
      if (std::gcd(n, d) != 1) continue;
      int m0 = torsion_params(n, d).m0;
      for (int k = 0; k <= 2 * m0; ++k) {
        o.require(riemann_roch_dimension(n, d, k) == semigroup_count(n, d, k),
                  "dim L(kO) differs at n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k));
        ++dims;
      }
    }
  if (o.passed)
    o.detail = "genus 1 " + std::to_string(a1) + "/50 (p <= 97), genus 2 " + std::to_string(a2) +
               "/20 (p <= 31); dim L(kO) matches on " + std::to_string(dims) + " (n,d,k)";
  return o;
}

Outcome slack_negative() {
  Outcome o;
  struct Case {
    int n, d, slack;
  };
  std::vector<std::string> seen;
  for (const auto& c : std::vector<Case>{{7, 5, -1}, {5, 4, -1}, {6, 5, -2}}) {
    auto params = torsion_params(c.n, c.d);
    auto v = reachability_status(c.n, c.d, params.m0, 0);
    std::string tag = "(" + std::to_string(c.n) + "," + std::to_string(c.d) + ")";
    o.require(params.slack == c.slack, tag + " slack " + std::to_string(params.slack));
    o.require(v.status == Reachability::Impossible, tag + " m0 = " + std::to_string(params.m0) + " is " +
                                                        std::string(to_string(v.status)));
    seen.push_back(tag + " slack " + std::to_string(params.slack));
  }
  if (o.passed) o.detail = join(seen) + ", m0 Impossible";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail; exit 0 iff exactly these fail");
  CLI11_PARSE(app, argc, argv);

  Criterion5Data c5;
  std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, equal0_orders},
      {2, equal1_elliptic},
      {3, kubert_round_trips},
      {4, admissibility_table},
      {5, [&] { return two_packet_oracle(c5); }},
      {6, bad_lambda_containment},
      {7, [&] { return wronskian_identities(c5); }},
      {8, oracle_self_consistency},
      {9, slack_negative},
  };
  std::set<int> failed;
  for (auto& [id, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << id << ": " << (o.passed ? "PASS" : "FAIL") << " (" << secs << " s) "
         << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.passed) failed.insert(id);
  }
  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  if (failed != expected) {
    std::cout << "unexpected outcome: failing set differs from --expect-fail\n";
    return 1;
  }
  return 0;
}
