#include "thermo/resource.hpp"

#include <algorithm>
#include <numeric>

namespace thermo {

namespace mp = boost::multiprecision;

ResourceState make_resource(Vector p, Vector g, std::string label) {
  if (p.size() != g.size()) {
    throw ResourceError("length mismatch: p has " + std::to_string(p.size()) + " entries, g has " +
                        std::to_string(g.size()));
  }
  if (p.empty()) throw ResourceError("empty resource");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].sign() < 0) throw ResourceError("p[" + std::to_string(i) + "] = " + p[i].str() + " is negative");
    if (g[i].sign() <= 0) {
      throw ResourceError("g[" + std::to_string(i) + "] = " + g[i].str() + " is not strictly positive");
    }
  }
  if (const Rational s = sum(p); s != 1) throw ResourceError("p sums to " + s.str() + ", not 1");
  if (const Rational s = sum(g); s != 1) throw ResourceError("g sums to " + s.str() + ", not 1");
  return ResourceState(std::move(p), std::move(g), std::move(label));
}

ResourceState trivial_resource() { return make_resource({1}, {1}, "trivial"); }

ResourceState gibbs_state_of(const ResourceState& r) { return make_resource(r.g(), r.g(), r.label() + ":gibbs"); }

Vector gibbs_from_hamiltonian(const Hamiltonian& h) {
  if (h.levels.empty()) throw ResourceError("Hamiltonian has no levels");
  if (!(h.beta > 0)) throw ResourceError("beta must be positive");
  if (h.precision < 1 || h.precision > kMaxGibbsPrecision) {
    throw ResourceError("precision must be in [1, " + std::to_string(kMaxGibbsPrecision) + "]");
  }
  // Shifting every level by the ground energy leaves g unchanged and keeps exp() in range.
  const Real ground = *std::min_element(h.levels.begin(), h.levels.end());
  std::vector<Real> w;
  w.reserve(h.levels.size());
  Real z = 0;
  for (const auto& e : h.levels) {
    w.push_back(mp::exp(-h.beta * (e - ground)));
    z += w.back();
  }

  const BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(h.precision));
  const Real real_scale(scale);
  Vector g;
  g.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const BigInt digits(mp::floor(w[i] / z * real_scale + Real(0.5)));
    if (digits == 0) {
      throw ResourceError("Gibbs weight of level " + std::to_string(i) + " rounds to 0 at precision " +
                          std::to_string(h.precision));
    }
    g.emplace_back(digits, scale);
  }

  std::size_t largest = 0;
  for (std::size_t i = 1; i < g.size(); ++i)
    if (g[i] > g[largest]) largest = i;
  g[largest] += Rational(1) - sum(g);
  if (g[largest].sign() <= 0) throw ResourceError("renormalization produced a non-positive Gibbs weight");
  return g;
}

RatioProfile ratio_profile(const ResourceState& r) {
  RatioProfile out;
  out.weights = r.g();
  out.ratios.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out.ratios.push_back(r.ratio(i));
  out.permutation.resize(r.size());
  std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
  std::stable_sort(out.permutation.begin(), out.permutation.end(),
                   [&](std::size_t a, std::size_t b) { return out.ratios[a] > out.ratios[b]; });
  return out;
}

std::vector<Step> decreasing_rearrangement(const ResourceState& r) {
  const RatioProfile profile = ratio_profile(r);
  std::vector<Step> steps;
  for (const std::size_t i : profile.permutation) {
    if (!steps.empty() && steps.back().value == profile.ratios[i]) {
      steps.back().width += profile.weights[i];
    } else {
      steps.push_back({profile.weights[i], profile.ratios[i]});
    }
  }
  return steps;
}

}  // namespace thermo
