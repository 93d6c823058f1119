#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "thermo/matrix.hpp"
#include "thermo/resource.hpp"

namespace thermo {

/// Exact optimum x* of the work linear program for a transformation R -> R',
/// with the witness F and the derived work W = -(1/beta) ln x*.
/// W > 0 is work extracted, W < 0 is work that must be supplied.
struct WorkResult {
  Rational x_star;
  Real work_gain;
  Matrix witness_F;  ///< n' x n
  Real beta;
};

/// True iff F >= 0, F p = p', F g <= x g' and every column of F sums to at most 1.
bool is_work_witness(const Matrix& F, const Rational& x, const ResourceState& from, const ResourceState& to);

/// min x  s.t.  F p = p',  F g <= x g',  1^T F <= 1^T,  x, F >= 0.
WorkResult work_gain_lp(const ResourceState& from, const ResourceState& to, const Real& beta);

/// Work extractable from r into the trivial resource: x* = sum of g_i over the support of p.
WorkResult work_value(const ResourceState& r, const Real& beta);

/// Work needed to create r from the trivial resource: x* = max_i p_i / g_i.
WorkResult work_cost(const ResourceState& r, const Real& beta);

/// x* for erasing an arbitrary distribution on `levels` degenerate levels to
/// a point mass. Throws std::invalid_argument when levels < 2.
Rational landauer_cost(int levels);

class LiftError : public std::invalid_argument {
 public:
  LiftError(const std::string& what, std::optional<Rational> threshold = std::nullopt)
      : std::invalid_argument(what), threshold_(std::move(threshold)) {}
  /// epsilon_max, when the error is an epsilon past the threshold.
  const std::optional<Rational>& threshold() const { return threshold_; }

 private:
  std::optional<Rational> threshold_;
};

/// A 2n' x 2n Gibbs-stochastic map on system + two-level weight, built from
/// a work LP witness. The weight is in its excited state; its gap rises from
/// E to E + W, with epsilon = e^{-beta E} and y = e^{-beta W}.
///
///   G = [ t g' 1^T      g' u^T ]      v = x g' - F g
///       [ eps v 1^T     F      ]      u = 1 - F^T 1
struct LiftedMap {
  Matrix G;
  Rational epsilon;
  Rational y;
  Rational t;
  Vector u;
  Vector v;
};

/// 1 / (1^T v), or nullopt when v = 0 and every epsilon keeps t >= 0.
std::optional<Rational> lift_epsilon_max(const WorkResult& result, const ResourceState& from,
                                         const ResourceState& to);

/// Builds the lifted map for epsilon in (0, 1). Throws LiftError when
/// epsilon >= epsilon_max (reporting the threshold) or the witness does not
/// fit the states.
LiftedMap lift_to_thermal_map(const WorkResult& result, const ResourceState& from, const ResourceState& to,
                              const Rational& epsilon);

struct LiftVerification {
  bool nonnegative = false;
  bool column_sums = false;
  bool resource_action = false;  ///< G (0,1)⊗p = (0,1)⊗p'
  bool gibbs_action = false;     ///< G (1,eps)⊗g = Z_E/Z_{E+W} (1, y eps)⊗g'
  bool z_identity = false;       ///< t + eps u^T g = (1+eps)/(1+eps y)
  bool all() const { return nonnegative && column_sums && resource_action && gibbs_action && z_identity; }
};

LiftVerification verify_lift(const LiftedMap& lift, const ResourceState& from, const ResourceState& to);

/// Cross-check harness: (convertible ⇔ x* <= 1) for from -> to, and the
/// closed forms for both states agree with the LP against the trivial resource.
bool work_gain_consistency(const ResourceState& from, const ResourceState& to);

}  // namespace thermo
