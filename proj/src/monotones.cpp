#include "thermo/monotones.hpp"

#include <limits>

namespace thermo {

namespace mp = boost::multiprecision;

namespace {

Real infinity() { return std::numeric_limits<Real>::infinity(); }

}  // namespace

MonotoneValue f_divergence(const ResourceState& r, const ConvexFunction& f) {
  Real total = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Real g = r.g()[i].to_real();
    if (r.p()[i].is_zero()) {
      if (!f.at_zero) return {f.name, infinity(), std::nullopt};
      total += g * *f.at_zero;
    } else {
      total += g * f.f(r.ratio(i).to_real());
    }
  }
  return {f.name, total, std::nullopt};
}

MonotoneValue f_divergence(const ResourceState& r, const ExactConvexFunction& f) {
  Rational total;
  for (std::size_t i = 0; i < r.size(); ++i) total += r.g()[i] * f.f(r.ratio(i));
  return {f.name, total.to_real(), total};
}

MonotoneValue relative_entropy(const ResourceState& r, bool reversed) {
  MonotoneValue v = f_divergence(r, reversed ? convex::neg_log() : convex::x_log_x());
  v.name = reversed ? "D(g||p)" : "D(p||g)";
  return v;
}

MonotoneValue renyi_divergence(const ResourceState& r, const Rational& alpha) {
  if (alpha.sign() < 0 || alpha == 1) throw std::invalid_argument("Renyi order must be >= 0 and != 1");
  const Real a = alpha.to_real();
  Real s = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.p()[i].is_zero()) continue;
    s += mp::pow(r.p()[i].to_real(), a) * mp::pow(r.g()[i].to_real(), 1 - a);
  }
  Real value = mp::log(s) / (a - 1);
  if (value == 0) value = 0;
  return {"D_" + alpha.str() + "(p||g)", value, std::nullopt};
}

namespace convex {

ExactConvexFunction total_variation() {
  return {"total_variation", [](const Rational& x) { return (x - 1).abs(); }};
}

ExactConvexFunction quadratic() {
  return {"x^2-1", [](const Rational& x) { return x * x - 1; }};
}

ExactConvexFunction hinge(const Rational& t) {
  return {"hinge(" + t.str() + ")", [t](const Rational& x) { return x > t ? x - t : Rational(); }};
}

ExactConvexFunction abs_deviation(const Rational& t) {
  return {"abs(" + t.str() + ")", [t](const Rational& x) { return (x - t).abs(); }};
}

ConvexFunction x_log_x() {
  return {"x log x", [](const Real& x) { return x * mp::log(x); }, Real(0)};
}

ConvexFunction neg_log() {
  return {"-log x", [](const Real& x) { return -mp::log(x); }, std::nullopt};
}

}  // namespace convex

std::vector<MonotoneValue> monotone_family(const ResourceState& r) {
  return {
      relative_entropy(r, false),
      relative_entropy(r, true),
      renyi_divergence(r, 0),
      renyi_divergence(r, Rational(1, 2)),
      renyi_divergence(r, 2),
      f_divergence(r, convex::total_variation()),
      f_divergence(r, convex::quadratic()),
  };
}

bool non_increasing(const MonotoneValue& from, const MonotoneValue& to, const Real& tolerance) {
  if (from.exact && to.exact) return *to.exact <= *from.exact;
  if (mp::isinf(from.value) && from.value > 0) return true;
  if (mp::isinf(to.value)) return to.value < 0;
  return to.value <= from.value + tolerance;
}

}  // namespace thermo
