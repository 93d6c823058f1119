#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "thermo/rational.hpp"

namespace thermo {

class ResourceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quasiclassical resource: populations p relative to a Gibbs state g.
///
/// Invariants (checked by make_resource): equal non-zero length, p_i >= 0,
/// g_i > 0, both summing to exactly 1. Instances are immutable.
class ResourceState {
 public:
  const Vector& p() const { return p_; }
  const Vector& g() const { return g_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return p_.size(); }

  /// p_i / g_i
  Rational ratio(std::size_t i) const { return p_[i] / g_[i]; }

  friend bool operator==(const ResourceState& a, const ResourceState& b) { return a.p_ == b.p_ && a.g_ == b.g_; }

 private:
  ResourceState(Vector p, Vector g, std::string label) : p_(std::move(p)), g_(std::move(g)), label_(std::move(label)) {}
  friend ResourceState make_resource(Vector p, Vector g, std::string label);

  Vector p_;
  Vector g_;
  std::string label_;
};

ResourceState make_resource(Vector p, Vector g, std::string label = {});

/// The one-level resource p = g = (1).
ResourceState trivial_resource();

/// The Gibbs state of r itself, i.e. (g, g).
ResourceState gibbs_state_of(const ResourceState& r);

/// Energy levels in units where beta * E is dimensionless.
struct Hamiltonian {
  std::vector<Real> levels;
  Real beta = 1;
  /// Decimal digits kept when the Gibbs weights are rationalized.
  int precision = 12;
};

/// Largest supported Hamiltonian::precision (bounded by the working precision of Real).
inline constexpr int kMaxGibbsPrecision = 80;

/// Gibbs weights e^{-beta E_i} / Z rounded to `precision` decimal digits,
/// then repaired to sum to exactly 1 by adjusting the largest entry
/// (lowest index on ties).
Vector gibbs_from_hamiltonian(const Hamiltonian& h);

struct RatioProfile {
  Vector ratios;   ///< p_i / g_i in original order
  Vector weights;  ///< g_i in original order
  /// Original indices sorted by non-increasing ratio; ties keep ascending index.
  std::vector<std::size_t> permutation;
};

RatioProfile ratio_profile(const ResourceState& r);

struct Step {
  Rational width;
  Rational value;
  friend bool operator==(const Step&, const Step&) = default;
};

/// Decreasing rearrangement of the ratios weighted by g, as a step
/// function on [0, 1]. Adjacent steps with equal value are merged.
std::vector<Step> decreasing_rearrangement(const ResourceState& r);

}  // namespace thermo
