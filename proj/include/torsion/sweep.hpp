#pragma once

#include "torsion/curve.hpp"
#include "torsion/two_packet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torsion {

// Parallel runs use OpenMP over a precomputed task list and write results by
// index, so both policies return identical vectors.
enum class ExecutionPolicy { Serial, Parallel };

// k-element subsets of {0, ..., N-1} in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(int N, int k);

struct PacketConfig {
  PacketCase packet_case = PacketCase::General;
  FieldElement A1;  // general case only
  FieldElement A2;
};

struct PacketRecord {
  std::vector<std::size_t> I;
  FieldElement lambda;
  PacketConfig config;
  FieldElement C;
  bool candidate_bad = false;
  bool confirmed_bad = false;  // x^(n+1) - u~^2 not squarefree
  // "built" or the ErrorKind name raised by the builder.
  std::string status;
  std::optional<PacketFamily> family;
  int points = 0;         // rational points above x = 0 and x = -1
  bool orders_ok = false;  // each has cantor order n + 1
};

// Every I with |I| = ell0, every lambda in F_p^*, every config.
std::vector<PacketRecord> sweep_two_packet(const FieldSpec& spec, int n, const std::vector<PacketConfig>& configs,
                                           ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct ContainmentRecord {
  std::vector<std::size_t> I;
  FieldElement C;
  std::vector<FieldElement> candidates;
  std::vector<FieldElement> confirmed;
  bool contained = false;
};

// bad_lambda_set against exhaustive squarefreeness for every I and each C.
std::vector<ContainmentRecord> containment_sweep(const FieldSpec& spec, int n, const std::vector<FieldElement>& Cs,
                                                 ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct OracleInstance {
  int d = 2;
  Poly f;
  AffinePoint P;
};

struct OracleAgreement {
  std::optional<int> group;  // elliptic (genus 1) or Cantor (d = 2) order
  std::optional<int> rr;     // Riemann-Roch order with max_k = group order
  bool agree = false;
};

// Hasse-Weil bound floor((1 + sqrt q)^(2g)) on the Jacobian order, plus one for rounding.
int hasse_weil_bound(std::int64_t p, int genus);

// d = 2 instances only. The Riemann-Roch search runs to the group-law order,
// so agreement means it finds no earlier principal multiple and hits that one.
std::vector<OracleAgreement> oracle_consistency(const std::vector<OracleInstance>& instances,
                                                ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace torsion
