#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "casimir/jet.hpp"
#include "casimir/mpoly.hpp"
#include "casimir/rational.hpp"
#include "casimir/tuple.hpp"

namespace casimir::testing {

/// a_i (1-based) in the ring of n variables.
inline MPoly a(std::size_t n, std::size_t i) { return MPoly::variable(n, i - 1); }
inline MPoly c(std::size_t n, const Rat& r) { return MPoly::constant(n, r); }
inline Rat q(long num, long den = 1) { return Rat(num) / Rat(den); }

/// Small rationals num/den with |num| <= 9, 1 <= den <= 5.
inline Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return Rat(num(rng)) / Rat(den(rng));
}

inline Jet<Rat> random_jet(int m, std::mt19937_64& rng, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  Jet<Rat> j(m, Rat(0));
  for (Subset s = 0; s <= j.full(); ++s)
    if (keep(rng)) j.set(s, random_rat(rng));
  return j;
}

/// Random point of Q^n on the hyperplane sum = 0.
inline std::vector<Rat> random_traceless_point(std::size_t n, std::mt19937_64& rng) {
  std::vector<Rat> p(n);
  Rat sum = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    p[i] = random_rat(rng);
    sum += p[i];
  }
  p[n - 1] = -sum;
  return p;
}

/// Directory holding frozen oracle values (set by the build).
inline std::string golden_dir() { return CASIMIR_GOLDEN_DIR; }

}  // namespace casimir::testing
