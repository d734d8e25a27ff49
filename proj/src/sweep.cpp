#include "torsion/sweep.hpp"

#include "torsion/error.hpp"
#include "torsion/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>

namespace torsion {

namespace {

// body(i) for i in [0, count); each call writes only its own slot. The
// first exception by task index is rethrown after the loop.
void run_tasks(std::size_t count, ExecutionPolicy policy, const std::function<void(std::size_t)>& body) {
  const auto n = static_cast<std::int64_t>(count);
  std::vector<std::exception_ptr> errors(count);
  auto guarded = [&](std::int64_t i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };
  if (policy == ExecutionPolicy::Serial) {
    for (std::int64_t i = 0; i < n; ++i) guarded(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) guarded(i);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void subsets_rec(int N, int k, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == static_cast<std::size_t>(k)) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < static_cast<std::size_t>(N); ++i) {
    cur.push_back(i);
    subsets_rec(N, k, i + 1, cur, out);
    cur.pop_back();
  }
}

FieldElement config_C(const PacketConfig& cfg, const FieldSpec& spec, int n) {
  if (cfg.packet_case != PacketCase::General) return spec.one();
  auto C = nth_root(cfg.A1 / cfg.A2, n + 1);
  if (!C) fail(ErrorKind::NoRootOfUnityStructure, "A1/A2 has no (n+1)-th root");
  return *C;
}

}  // namespace

std::vector<std::vector<std::size_t>> index_subsets(int N, int k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets_rec(N, k, 0, cur, out);
  return out;
}

std::vector<PacketRecord> sweep_two_packet(const FieldSpec& spec, int n, const std::vector<PacketConfig>& configs,
                                           ExecutionPolicy policy) {
  const auto subsets = index_subsets(n + 1, (n + 1) / 2);
  struct Task {
    std::size_t config, subset;
    std::int64_t lambda;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < configs.size(); ++c)
    for (std::size_t s = 0; s < subsets.size(); ++s)
      for (std::int64_t k = 1; k < spec.characteristic(); ++k) tasks.push_back({c, s, k});

  // Candidate sets depend on (config, I) only.
  std::vector<std::vector<FieldElement>> candidates(configs.size() * subsets.size());
  std::vector<FieldElement> Cs;
  for (const auto& cfg : configs) Cs.push_back(config_C(cfg, spec, n));
  run_tasks(candidates.size(), policy, [&](std::size_t i) {
    candidates[i] = bad_lambda_set(spec, n, subsets[i % subsets.size()], Cs[i / subsets.size()]).candidates;
  });

  std::vector<PacketRecord> out(tasks.size());
  run_tasks(tasks.size(), policy, [&](std::size_t i) {
    const Task& t = tasks[i];
    const PacketConfig& cfg = configs[t.config];
    PacketRecord rec;
    rec.I = subsets[t.subset];
    rec.lambda = spec.element(t.lambda);
    rec.config = cfg;
    rec.C = Cs[t.config];
    const auto& cand = candidates[t.config * subsets.size() + t.subset];
    rec.candidate_bad = std::binary_search(cand.begin(), cand.end(), rec.lambda);
    Poly g = finite_polynomial(spec, n, rec.I, rec.C, rec.lambda);
    rec.confirmed_bad = g.is_zero() || !is_squarefree(g);
    try {
      rec.family = cfg.packet_case == PacketCase::General
                       ? build_two_packet_general(spec, n, rec.I, rec.lambda, cfg.A1, cfg.A2)
                       : build_two_packet_equal(spec, n, rec.I, rec.lambda, cfg.packet_case);
      rec.status = "built";
      auto pts = packet_points(*rec.family);
      rec.points = static_cast<int>(pts.size());
      rec.orders_ok = true;
      for (const auto& P : pts) rec.orders_ok = rec.orders_ok && cantor_order(rec.family->f, P, 4 * (n + 1)) == n + 1;
    } catch (const Error& e) {
      rec.status = std::string(to_string(e.kind()));
    }
    out[i] = std::move(rec);
  });
  return out;
}

std::vector<ContainmentRecord> containment_sweep(const FieldSpec& spec, int n, const std::vector<FieldElement>& Cs,
                                                 ExecutionPolicy policy) {
  const auto subsets = index_subsets(n + 1, (n + 1) / 2);
  std::vector<ContainmentRecord> out(Cs.size() * subsets.size());
  run_tasks(out.size(), policy, [&](std::size_t i) {
    ContainmentRecord rec;
    rec.I = subsets[i % subsets.size()];
    rec.C = Cs[i / subsets.size()];
    rec.candidates = bad_lambda_set(spec, n, rec.I, rec.C).candidates;
    rec.confirmed = confirmed_bad_lambdas(spec, n, rec.I, rec.C);
    rec.contained = std::all_of(rec.confirmed.begin(), rec.confirmed.end(), [&](const FieldElement& l) {
      return std::binary_search(rec.candidates.begin(), rec.candidates.end(), l);
    });
    out[i] = std::move(rec);
  });
  return out;
}

int hasse_weil_bound(std::int64_t p, int genus) {
  return static_cast<int>(std::floor(std::pow(1.0 + std::sqrt(static_cast<double>(p)), 2 * genus))) + 1;
}

std::vector<OracleAgreement> oracle_consistency(const std::vector<OracleInstance>& instances, ExecutionPolicy policy) {
  std::vector<OracleAgreement> out(instances.size());
  run_tasks(instances.size(), policy, [&](std::size_t i) {
    const OracleInstance& inst = instances[i];
    if (inst.d != 2) fail(ErrorKind::BadParameters, "group-law oracles need d = 2");
    SuperellipticCurve curve(inst.d, inst.f);
    const int bound = hasse_weil_bound(curve.spec().characteristic(), curve.genus());
    OracleAgreement a;
    a.group = curve.n() == 3 ? elliptic_order(inst.f, inst.P, bound) : cantor_order(inst.f, inst.P, bound);
    if (inst.P.y.is_zero())
      a.rr = order_of_ramified(curve, inst.P);
    else if (a.group)
      a.rr = order_of_class(curve, inst.P, *a.group);
    a.agree = a.group && a.rr == a.group;
    out[i] = a;
  });
  return out;
}

}  // namespace torsion
