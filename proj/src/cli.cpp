#include "torsion/cli.hpp"

#include "torsion/certificate.hpp"
#include "torsion/curve.hpp"
#include "torsion/elliptic_four.hpp"
#include "torsion/error.hpp"
#include "torsion/io.hpp"
#include "torsion/oracle.hpp"
#include "torsion/sweep.hpp"
#include "torsion/two_packet.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace torsion {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

FieldElement parse_scalar(const FieldSpec& spec, const std::string& text) { return FieldElement::parse(spec, text); }

Poly parse_poly(const FieldSpec& spec, const std::string& text) {
  std::vector<FieldElement> coeffs;
  for (const auto& c : split_commas(text)) coeffs.push_back(parse_scalar(spec, c));
  return Poly(spec, std::move(coeffs));
}

AffinePoint parse_point(const FieldSpec& spec, const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 2) fail(ErrorKind::SchemaViolation, "point must be x,y, got '" + text + "'");
  return {parse_scalar(spec, parts[0]), parse_scalar(spec, parts[1])};
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& c : split_commas(text)) {
    if (c.empty() || !std::all_of(c.begin(), c.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      fail(ErrorKind::SchemaViolation, "index list must be like 0,2, got '" + text + "'");
    out.push_back(std::stoul(c));
  }
  return out;
}

PacketCase parse_case(const std::string& text) {
  if (text == "C1_5") return PacketCase::C1_5;
  if (text == "C1_6") return PacketCase::C1_6;
  fail(ErrorKind::BadParameters, "--case must be C1_5 or C1_6, got '" + text + "'");
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::SchemaViolation, std::string("invalid JSON: ") + e.what());
  }
}

// One JSON document per non-blank line.
std::vector<Json> read_documents(const std::string& path, std::istream& in) {
  std::ifstream file;
  std::istream* src = &in;
  if (path != "-") {
    file.open(path);
    if (!file) throw IoError("cannot open '" + path + "'");
    src = &file;
  }
  std::vector<Json> docs;
  std::string line;
  while (std::getline(*src, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    docs.push_back(parse_json_text(line));
  }
  return docs;
}

struct Session {
  std::ostream& out;
  RunManifest manifest;

  void emit(const Json& doc, bool passed) {
    out << doc.dump() << '\n';
    manifest.results.push_back(doc);
    (passed ? manifest.checks_passed : manifest.checks_failed)++;
  }
  int exit_code() const { return manifest.checks_failed == 0 ? 0 : 1; }
};

struct Options {
  std::string field = "Q";
  std::string manifest_path;
  int n = 0, d = 0, m = 0;
  std::int64_t characteristic = 0;
  std::string a = "0", B = "1", B1, b, q;
  std::string input = "-";
  int max_k = 0;
  bool no_oracle = false;
  std::string curve_path, f, point, backend = "rr";
  std::optional<int> expect;
  std::int64_t p = 0;
  std::string I, lambda, A1, A2, C, packet_case = "C1_5";
  bool equal = false, as_printed = false, confirm = false, serial = false;
};

int run_construct(const Options& o, Session& s) {
  FieldSpec spec = parse_field_arg(o.field);
  auto cert = build_certificate(o.n, o.d, parse_scalar(spec, o.a), parse_scalar(spec, o.B), parse_poly(spec, o.q));
  s.emit(certificate_to_json(cert), true);
  return s.exit_code();
}

int run_verify(const Options& o, Session& s, std::istream& in) {
  VerifyOptions vo;
  vo.run_oracle = !o.no_oracle;
  vo.max_k = o.max_k;
  for (const auto& doc : read_documents(o.input, in)) {
    auto report = verify_certificate(certificate_from_json(doc), vo);
    s.emit(report_to_json(report), report.all_passed());
  }
  return s.exit_code();
}

int run_normalize(const Options& o, Session& s, std::istream& in) {
  for (const auto& doc : read_documents(o.input, in))
    s.emit(normalized_to_json(normalize_certificate(certificate_from_json(doc))), true);
  return s.exit_code();
}

int run_family(const std::string& which, const Options& o, Session& s) {
  FieldSpec spec = parse_field_arg(o.field);
  if (which == "equal0") {
    s.emit(certificate_to_json(family_equal0(o.n, o.d, spec)), true);
  } else if (which == "equal1") {
    auto fam = family_equal1(o.n, o.d, parse_scalar(spec, o.B), parse_scalar(spec, o.B1));
    Json doc = certificate_to_json(fam.certificate);
    doc["order_d_point"] = point_to_json(fam.order_d_point);
    s.emit(doc, true);
  } else {
    auto ex = example_m0_equals_nplus1(o.n, o.d, spec);
    Json abscissas = Json::array(), points = Json::array();
    for (const auto& x : ex.abscissas) abscissas.push_back(scalar_to_json(x));
    for (const auto& P : ex.points) points.push_back(point_to_json(P));
    Json doc{{"curve", curve_to_json(ex.curve)},
             {"A1", scalar_to_json(ex.A1)},
             {"A2", scalar_to_json(ex.A2)},
             {"v", poly_to_json(ex.v)}};
    doc["gamma"] = ex.gamma ? scalar_to_json(*ex.gamma) : Json(nullptr);
    doc["u"] = ex.u ? poly_to_json(*ex.u) : Json(nullptr);
    doc["abscissas"] = abscissas;
    doc["points"] = points;
    s.emit(doc, true);
  }
  return s.exit_code();
}

int run_elliptic4(const std::string& which, const Options& o, Session& s) {
  FieldSpec spec = parse_field_arg(o.field);
  if (which == "build") {
    auto fam = build_family(parse_scalar(spec, o.B), parse_scalar(spec, o.B1));
    auto report = check_order_structure(fam);
    Json doc = elliptic_family_to_json(fam);
    doc["report"] = report_to_json(report);
    s.emit(doc, report.all_passed());
  } else if (which == "from-kubert") {
    auto b = parse_scalar(spec, o.b);
    auto k = from_kubert(b);
    auto report = check_order_structure(k.family);
    AffinePoint image = k.to_family.apply({spec.zero(), spec.zero()});
    Json doc = elliptic_family_to_json(k.family);
    doc["b"] = scalar_to_json(b);
    doc["map_verified"] = k.map_verified;
    doc["kubert_origin_image"] = point_to_json(image);
    auto image_order = elliptic_order(k.family.f, image, 8);
    doc["kubert_origin_order"] = image_order ? Json(*image_order) : Json(nullptr);
    doc["report"] = report_to_json(report);
    s.emit(doc, k.map_verified && report.all_passed());
  } else {
    auto fam = build_family(parse_scalar(spec, o.B), parse_scalar(spec, o.B1));
    auto red = to_kubert(fam);
    Json doc{{"field", field_to_json(spec)},
             {"B", scalar_to_json(fam.B)},
             {"B1", scalar_to_json(fam.B1)},
             {"b", scalar_to_json(red.b)},
             {"chain_family", poly_to_json(red.chain_family)},
             {"chain_kubert", poly_to_json(red.chain_kubert)},
             {"closed_form", poly_to_json(red.closed_form)},
             {"agree", red.agree()}};
    s.emit(doc, red.agree());
  }
  return s.exit_code();
}

int run_order(const Options& o, Session& s, std::istream& in) {
  std::optional<SuperellipticCurve> curve;
  if (!o.curve_path.empty()) {
    auto docs = read_documents(o.curve_path, in);
    if (docs.size() != 1) fail(ErrorKind::SchemaViolation, "--curve must hold exactly one curve document");
    curve.emplace(curve_from_json(docs[0]));
  } else {
    if (o.f.empty() || o.d == 0) fail(ErrorKind::BadParameters, "give --curve or both --d and --f");
    curve.emplace(o.d, parse_poly(parse_field_arg(o.field), o.f));
  }
  const FieldSpec& spec = curve->spec();
  AffinePoint xy = parse_point(spec, o.point);
  AffinePoint P = curve->point(xy.x, xy.y);

  int max_k = o.max_k;
  std::optional<int> order;
  if (o.backend == "rr") {
    if (max_k <= 0) max_k = 2 * curve->params().m0;
    order = P.y.is_zero() ? std::optional<int>(order_of_ramified(*curve, P)) : order_of_class(*curve, P, max_k);
  } else {
    if (curve->d() != 2) fail(ErrorKind::BadParameters, "backend " + o.backend + " needs d = 2");
    if (max_k <= 0)
      max_k = spec.is_prime_field() ? hasse_weil_bound(spec.p(), curve->genus()) : 2 * curve->params().m0;
    if (o.backend == "elliptic")
      order = elliptic_order(curve->f(), P, max_k);
    else if (o.backend == "cantor")
      order = cantor_order(curve->f(), P, max_k);
    else
      fail(ErrorKind::BadParameters, "--backend must be rr, cantor or elliptic");
  }
  Json doc{{"backend", o.backend}, {"point", point_to_json(P)}, {"max_k", max_k}};
  doc["order"] = order ? Json(*order) : Json(nullptr);
  if (!order) doc["result"] = "exceeds max";
  bool ok = !o.expect || order == o.expect;
  if (o.expect) doc["expected"] = *o.expect;
  s.emit(doc, ok);
  return s.exit_code();
}

Json packet_points_json(const PacketFamily& fam, bool& orders_ok) {
  Json pts = Json::array();
  orders_ok = true;
  for (const auto& P : packet_points(fam)) {
    auto ord = cantor_order(fam.f, P, 4 * (fam.n + 1));
    orders_ok = orders_ok && ord == fam.n + 1;
    Json e = point_to_json(P);
    e["order"] = ord ? Json(*ord) : Json(nullptr);
    pts.push_back(e);
  }
  return pts;
}

std::vector<PacketConfig> default_configs(const FieldSpec& spec, int n) {
  std::vector<PacketConfig> configs{{PacketCase::C1_5, spec.one(), spec.one()},
                                    {PacketCase::C1_6, spec.one(), spec.one()}};
  // General case: A2 = 1 and every (n+1)-th power A1 other than 1.
  std::vector<FieldElement> powers;
  for (std::int64_t k = 1; k < spec.p(); ++k) powers.push_back(spec.element(k).pow(n + 1));
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  for (const auto& A1 : powers)
    if (!A1.is_one()) configs.push_back({PacketCase::General, A1, spec.one()});
  return configs;
}

int run_two_packet(const std::string& which, const Options& o, Session& s) {
  if (which == "admissible") {
    s.emit(admissibility_to_json(two_packet_admissible(o.n, o.d)), true);
    return s.exit_code();
  }
  FieldSpec spec = parse_field_arg("F" + std::to_string(o.p));
  if (which == "build") {
    auto I = parse_indices(o.I);
    auto lambda = parse_scalar(spec, o.lambda);
    PacketFamily fam;
    if (o.equal) {
      fam = build_two_packet_equal(spec, o.n, I, lambda, parse_case(o.packet_case));
    } else {
      if (o.A1.empty() || o.A2.empty()) fail(ErrorKind::BadParameters, "give --A1 and --A2, or --equal");
      fam = build_two_packet_general(spec, o.n, I, lambda, parse_scalar(spec, o.A1), parse_scalar(spec, o.A2));
    }
    bool orders_ok = false;
    Json doc = packet_family_to_json(fam);
    doc["points"] = packet_points_json(fam, orders_ok);
    doc["identity_holds"] = fam.identity_holds();
    bool ok = orders_ok && fam.identity_holds();
    s.emit(doc, ok);
  } else if (which == "bad-lambdas") {
    auto I = parse_indices(o.I);
    auto C = o.C.empty() ? spec.one() : parse_scalar(spec, o.C);
    auto rep = bad_lambda_set(spec, o.n, I, C, o.as_printed);
    Json x0 = Json::array(), cand = Json::array();
    for (const auto& x : rep.x0) x0.push_back(scalar_to_json(x));
    for (const auto& l : rep.candidates) cand.push_back(scalar_to_json(l));
    Json doc{{"field", field_to_json(spec)},
             {"n", o.n},
             {"I", I},
             {"C", scalar_to_json(C)},
             {"as_printed", o.as_printed},
             {"L_I", poly_to_json(rep.L_I)},
             {"L_co", poly_to_json(rep.L_co)},
             {"mult10", poly_to_json(rep.mult10)},
             {"mult10_vanishes", rep.mult10_vanishes},
             {"unbounded", rep.unbounded},
             {"x0", x0},
             {"candidates", cand}};
    bool ok = true;
    if (o.confirm) {
      Json conf = Json::array();
      for (const auto& l : confirmed_bad_lambdas(spec, o.n, I, C)) {
        conf.push_back(scalar_to_json(l));
        ok = ok && std::binary_search(rep.candidates.begin(), rep.candidates.end(), l);
      }
      doc["confirmed"] = conf;
      doc["contained"] = ok;
    }
    s.emit(doc, ok);
  } else {
    std::vector<PacketConfig> configs;
    if (!o.A1.empty() || !o.A2.empty()) {
      if (o.A1.empty() || o.A2.empty()) fail(ErrorKind::BadParameters, "give both --A1 and --A2");
      configs.push_back({PacketCase::General, parse_scalar(spec, o.A1), parse_scalar(spec, o.A2)});
    } else {
      configs = default_configs(spec, o.n);
    }
    auto records = sweep_two_packet(spec, o.n, configs, o.serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel);
    int built = 0, verified = 0;
    for (const auto& r : records) {
      if (!r.family) continue;
      ++built;
      verified += r.orders_ok;
      bool orders_ok = false;
      Json doc = packet_family_to_json(*r.family);
      doc["points"] = packet_points_json(*r.family, orders_ok);
      doc["candidate_bad"] = r.candidate_bad;
      s.emit(doc, orders_ok);
    }
    std::map<std::string, int> statuses;
    for (const auto& r : records) statuses[r.status]++;
    Json summary{{"records", records.size()}, {"built", built}, {"verified", verified}, {"statuses", statuses}};
    s.out << Json{{"summary", summary}}.dump() << '\n';
  }
  return s.exit_code();
}

int run_reachability(const Options& o, Session& s) {
  s.emit(reachability_to_json(o.n, o.d, o.m, reachability_status(o.n, o.d, o.m, o.characteristic)), true);
  return s.exit_code();
}

void write_manifest(const std::string& path, const RunManifest& m) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << m.to_json().dump(2) << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Torsion points on superelliptic curves y^d = f(x)", "torsion"};
  app.require_subcommand(1);
  app.add_option("--manifest", o.manifest_path, "Also write a run manifest to this file");

  auto field_opt = [&](CLI::App* sub) { sub->add_option("--field", o.field, "Q, F<p> or Fp:<p>"); };
  auto nd = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Degree of f")->required();
    sub->add_option("--d", o.d, "Exponent of y")->required();
  };

  auto* construct = app.add_subcommand("construct", "Build a certificate f = -B^d (x-a)^m0 + v^d");
  nd(construct);
  field_opt(construct);
  construct->add_option("--a", o.a);
  construct->add_option("--B", o.B);
  construct->add_option("--q", o.q, "Ascending coefficients, comma separated")->required();

  auto* verify = app.add_subcommand("verify", "Verify certificates, one JSON document per line");
  verify->add_option("--input", o.input, "File, or - for stdin");
  verify->add_option("--max-k", o.max_k);
  verify->add_flag("--no-oracle", o.no_oracle);

  auto* normalize = app.add_subcommand("normalize", "Move the point of a certificate to (0, 1)");
  normalize->add_option("--input", o.input, "File, or - for stdin");

  auto* family = app.add_subcommand("family", "Closed-form families");
  family->require_subcommand(1);
  auto* equal0 = family->add_subcommand("equal0", "f0 = -x^m0 + (x^ell0 + 1)^d");
  nd(equal0);
  field_opt(equal0);
  auto* equal1 = family->add_subcommand("equal1", "f = -B^d x^m0 + (B x^ell0 + B1 x + 1)^d");
  nd(equal1);
  field_opt(equal1);
  equal1->add_option("--B", o.B)->required();
  equal1->add_option("--B1", o.B1)->required();
  auto* m0nplus1 = family->add_subcommand("m0nplus1", "y^d = (x+1)^m0 - x^m0 with m0 = n+1");
  nd(m0nplus1);
  field_opt(m0nplus1);

  auto* elliptic4 = app.add_subcommand("elliptic4", "Elliptic curves with a rational 4-torsion point");
  elliptic4->require_subcommand(1);
  auto* e_build = elliptic4->add_subcommand("build");
  auto* e_from = elliptic4->add_subcommand("from-kubert");
  auto* e_to = elliptic4->add_subcommand("to-kubert");
  for (auto* sub : {e_build, e_to}) {
    field_opt(sub);
    sub->add_option("--B", o.B)->required();
    sub->add_option("--B1", o.B1)->required();
  }
  field_opt(e_from);
  e_from->add_option("--b", o.b)->required();

  auto* order = app.add_subcommand("order", "Order of [P - O]");
  order->add_option("--curve", o.curve_path, "Curve JSON file, or - for stdin");
  order->add_option("--d", o.d);
  order->add_option("--f", o.f, "Ascending coefficients, comma separated");
  field_opt(order);
  order->add_option("--point", o.point, "x,y")->required();
  order->add_option("--max-k", o.max_k);
  order->add_option("--backend", o.backend)->check(CLI::IsMember({"rr", "cantor", "elliptic"}));
  order->add_option("--expect", o.expect, "Exit 1 unless the order equals this");

  auto* two = app.add_subcommand("two-packet", "Curves with two packets of order-m0 points");
  two->require_subcommand(1);
  auto* t_adm = two->add_subcommand("admissible");
  nd(t_adm);
  auto* t_build = two->add_subcommand("build");
  auto* t_bad = two->add_subcommand("bad-lambdas");
  auto* t_sweep = two->add_subcommand("sweep");
  for (auto* sub : {t_build, t_bad, t_sweep}) {
    sub->add_option("--p", o.p)->required();
    sub->add_option("--n", o.n)->required();
  }
  t_build->add_option("--I", o.I)->required();
  t_build->add_option("--lambda", o.lambda)->required();
  t_build->add_option("--A1", o.A1);
  t_build->add_option("--A2", o.A2);
  t_build->add_flag("--equal", o.equal);
  t_build->add_option("--case", o.packet_case)->check(CLI::IsMember({"C1_5", "C1_6"}));
  t_bad->add_option("--I", o.I)->required();
  t_bad->add_option("--C", o.C);
  t_bad->add_flag("--as-printed", o.as_printed, "Use k = C^ell0 and x^n in the exclusion polynomial");
  t_bad->add_flag("--confirm", o.confirm, "Also list lambdas found bad by exhaustion");
  t_sweep->add_option("--A1", o.A1);
  t_sweep->add_option("--A2", o.A2);
  t_sweep->add_flag("--serial", o.serial);

  auto* reach = app.add_subcommand("reachability", "Is order m reachable for (n, d)?");
  nd(reach);
  reach->add_option("--m", o.m)->required();
  reach->add_option("--char", o.characteristic);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Session s{out, {}};
  for (std::size_t i = 0; i < args.size(); ++i) s.manifest.parameters["argv" + std::to_string(i)] = args[i];
  auto sub_name = [](CLI::App* parent) {
    for (auto* sub : parent->get_subcommands()) return sub->get_name();
    return std::string();
  };
  int code = 0;
  try {
    CLI::App* top = app.get_subcommands().front();
    s.manifest.command = top->get_name();
    if (top->get_subcommands().size() == 1) s.manifest.command += " " + sub_name(top);
    if (top == construct) code = run_construct(o, s);
    else if (top == verify) code = run_verify(o, s, in);
    else if (top == normalize) code = run_normalize(o, s, in);
    else if (top == family) code = run_family(sub_name(family), o, s);
    else if (top == elliptic4) code = run_elliptic4(sub_name(elliptic4), o, s);
    else if (top == order) code = run_order(o, s, in);
    else if (top == two) code = run_two_packet(sub_name(two), o, s);
    else code = run_reachability(o, s);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = is_usage_error(e.kind()) ? 2 : 1;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    code = 2;
  }
  if (!o.manifest_path.empty()) {
    try {
      write_manifest(o.manifest_path, s.manifest);
    } catch (const IoError& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
  }
  return code;
}

}  // namespace torsion
