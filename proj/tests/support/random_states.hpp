#pragma once

// Deterministic random resources for property tests. Entries are k / D with
// a common denominator D <= 12.

#include <algorithm>
#include <random>
#include <vector>

#include "thermo/resource.hpp"

namespace thermo::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// `parts` integers summing to `total`, each >= `min_part`.
inline std::vector<int> random_composition(Rng& rng, int total, std::size_t parts, int min_part) {
  const int free = total - min_part * static_cast<int>(parts);
  std::vector<int> cuts;
  for (std::size_t i = 0; i + 1 < parts; ++i) cuts.push_back(uniform_int(rng, 0, free));
  cuts.push_back(0);
  cuts.push_back(free);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < parts; ++i) out.push_back(min_part + cuts[i + 1] - cuts[i]);
  return out;
}

inline Vector as_fractions(const std::vector<int>& counts, int denominator) {
  Vector v;
  for (const int c : counts) v.emplace_back(c, denominator);
  return v;
}

/// Strictly positive Gibbs vector of length n (n <= 12).
inline Vector random_gibbs(Rng& rng, std::size_t n, int max_den = 12) {
  const int d = uniform_int(rng, static_cast<int>(n), max_den);
  return as_fractions(random_composition(rng, d, n, 1), d);
}

/// Probability vector of length n; zero entries allowed.
inline Vector random_distribution(Rng& rng, std::size_t n, int max_den = 12) {
  const int d = uniform_int(rng, 1, max_den);
  return as_fractions(random_composition(rng, d, n, 0), d);
}

inline ResourceState random_state(Rng& rng, std::size_t n, int max_den = 12) {
  return make_resource(random_distribution(rng, n, max_den), random_gibbs(rng, n, max_den));
}

inline ResourceState random_state_between(Rng& rng, std::size_t min_n, std::size_t max_n) {
  return random_state(rng, static_cast<std::size_t>(uniform_int(rng, static_cast<int>(min_n), static_cast<int>(max_n))));
}

/// (1 - mu) p + mu g, the image of r under the partial thermalization
/// G = (1 - mu) I + mu g 1^T.
inline ResourceState thermalize(const ResourceState& r, const Rational& mu) {
  Vector p(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) p[i] = (Rational(1) - mu) * r.p()[i] + mu * r.g()[i];
  return make_resource(std::move(p), r.g());
}

/// Pairs that mix independent draws with related ones (partial
/// thermalizations, including mu = 0) so both verdicts and boundary cases
/// show up often.
inline std::pair<ResourceState, ResourceState> random_pair(Rng& rng, std::size_t max_n) {
  const ResourceState a = random_state_between(rng, 1, max_n);
  switch (uniform_int(rng, 0, 3)) {
    case 0: {
      static const Rational mus[] = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
      return {a, thermalize(a, mus[uniform_int(rng, 0, 4)])};
    }
    case 1: {
      // Same Gibbs vector, independent populations.
      return {a, make_resource(random_distribution(rng, a.size()), a.g())};
    }
    default:
      return {a, random_state_between(rng, 1, max_n)};
  }
}

}  // namespace thermo::testing
