#pragma once

// Seeded random inputs for property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/polynomial.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Product of `steps` random elementary operations (row additions with small
/// multipliers, swaps, sign flips).
inline toric::UnimodularMatrix unimodular(Rng& rng, std::size_t n, int steps = 6) {
  std::vector<std::vector<toric::Integer>> m(n, std::vector<toric::Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (int s = 0; s < steps; ++s) {
    const auto kind = uniform(rng, 0, 3);
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (kind <= 1 && n > 1) {
      while (j == i) j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      const long c = uniform(rng, -2, 2);
      for (std::size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];
    } else if (kind == 2) {
      std::swap(m[i], m[j]);
    } else {
      for (auto& x : m[i]) x = -x;
    }
  }
  return toric::UnimodularMatrix(m);
}

inline std::vector<int> permutation(Rng& rng, std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Random homogeneous polynomial of degree k with at most `terms` terms and
/// small integer coefficients (may be zero).
inline toric::Polynomial homogeneous(Rng& rng, std::size_t nvars, int k, int terms) {
  toric::Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nvars, 0);
    for (int d = 0; d < k; ++d) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(nvars) - 1))];
    p.add_term(toric::Monomial(e), toric::Rational(uniform(rng, -3, 3)));
  }
  return p;
}

}  // namespace gen
