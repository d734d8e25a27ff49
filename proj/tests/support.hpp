#pragma once

#include "torsion/field.hpp"
#include "torsion/poly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace torsion::testing {

// Fixed-seed generators shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  FieldElement element(const FieldSpec& spec) {
    if (spec.is_prime_field()) return spec.element(range(0, spec.p() - 1));
    return spec.element(mpq_class(range(-20, 20), range(1, 9)));
  }

  FieldElement nonzero(const FieldSpec& spec) {
    for (;;) {
      FieldElement e = element(spec);
      if (!e.is_zero()) return e;
    }
  }

  Poly poly(const FieldSpec& spec, int degree) {
    std::vector<FieldElement> c;
    for (int i = 0; i < degree; ++i) c.push_back(element(spec));
    c.push_back(nonzero(spec));
    return Poly(spec, c);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline FieldElement q(const FieldSpec& spec, const char* text) { return FieldElement::parse(spec, text); }

}  // namespace torsion::testing
