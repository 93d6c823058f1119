#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thermo/resource.hpp"

namespace thermo {

/// Value of a thermal monotone. `value` may be +infinity; `exact` is set
/// when the monotone was evaluated in exact arithmetic.
struct MonotoneValue {
  std::string name;
  Real value;
  std::optional<Rational> exact;
};

/// A convex f evaluated in real arithmetic. `at_zero` is f's value (or
/// limit) at ratio 0; nullopt means +infinity.
///
/// Convexity is the caller's promise. For non-convex f the result is still
/// computed but is not a monotone.
struct ConvexFunction {
  std::string name;
  std::function<Real(const Real&)> f;
  std::optional<Real> at_zero;
};

/// A convex f with rational values, evaluated exactly (including at 0).
struct ExactConvexFunction {
  std::string name;
  std::function<Rational(const Rational&)> f;
};

/// sum_i g_i f(p_i / g_i)
MonotoneValue f_divergence(const ResourceState& r, const ConvexFunction& f);
MonotoneValue f_divergence(const ResourceState& r, const ExactConvexFunction& f);

/// D(p||g), or D(g||p) when reversed (+inf if p has a zero).
MonotoneValue relative_entropy(const ResourceState& r, bool reversed = false);

/// D_alpha(p||g) = 1/(alpha-1) ln sum_i p_i^alpha g_i^(1-alpha), alpha >= 0,
/// alpha != 1. Terms with p_i = 0 are dropped, also at alpha = 0.
MonotoneValue renyi_divergence(const ResourceState& r, const Rational& alpha);

namespace convex {

ExactConvexFunction total_variation();  ///< |x - 1|
ExactConvexFunction quadratic();        ///< x^2 - 1
ExactConvexFunction hinge(const Rational& t);         ///< (x - t)_+
ExactConvexFunction abs_deviation(const Rational& t);  ///< |x - t|
ConvexFunction x_log_x();
ConvexFunction neg_log();

}  // namespace convex

/// The monotones reported by the CLI: D(p||g), D(g||p), D_0, D_1/2, D_2,
/// total variation, x^2 - 1.
std::vector<MonotoneValue> monotone_family(const ResourceState& r);

/// phi(to) <= phi(from) + tolerance, with +inf <= +inf holding.
bool non_increasing(const MonotoneValue& from, const MonotoneValue& to, const Real& tolerance);

}  // namespace thermo
