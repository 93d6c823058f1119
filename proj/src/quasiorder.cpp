#include "thermo/quasiorder.hpp"

#include <algorithm>

namespace thermo {

namespace {

// Cross-product test for (a, b, c) on one line.
bool collinear(const LorenzPoint& a, const LorenzPoint& b, const LorenzPoint& c) {
  return (b.L - a.L) * (c.t - b.t) == (c.L - b.L) * (b.t - a.t);
}

}  // namespace

LorenzCurve::LorenzCurve(std::vector<LorenzPoint> points) {
  if (points.size() < 2 || points.front() != LorenzPoint{0, 0} || points.back() != LorenzPoint{1, 1}) {
    throw std::invalid_argument("Lorenz curve must run from (0,0) to (1,1)");
  }
  for (auto& pt : points) {
    if (!points_.empty() && pt.t <= points_.back().t) throw std::invalid_argument("Lorenz abscissae must increase");
    if (points_.size() >= 2 && collinear(points_[points_.size() - 2], points_.back(), pt)) points_.pop_back();
    points_.push_back(std::move(pt));
  }
}

Rational LorenzCurve::operator()(const Rational& t) const {
  if (t.sign() < 0 || t > 1) throw std::out_of_range("Lorenz curve evaluated outside [0,1]");
  auto it = std::lower_bound(points_.begin(), points_.end(), t,
                             [](const LorenzPoint& pt, const Rational& x) { return pt.t < x; });
  if (it->t == t) return it->L;
  const LorenzPoint& hi = *it;
  const LorenzPoint& lo = *(it - 1);
  return lo.L + (hi.L - lo.L) * (t - lo.t) / (hi.t - lo.t);
}

LorenzCurve lorenz_curve(const ResourceState& r) {
  const RatioProfile profile = ratio_profile(r);
  std::vector<LorenzPoint> points{{0, 0}};
  Rational t, L;
  for (const std::size_t i : profile.permutation) {
    t += r.g()[i];
    L += r.p()[i];
    points.push_back({t, L});
  }
  return LorenzCurve(std::move(points));
}

bool lorenz_dominates(const LorenzCurve& a, const LorenzCurve& b) {
  for (const auto& pt : b.points())
    if (a(pt.t) < pt.L) return false;
  for (const auto& pt : a.points())
    if (pt.L < b(pt.t)) return false;
  return true;
}

bool is_gibbs_stochastic_witness(const Matrix& G, const ResourceState& from, const ResourceState& to) {
  if (G.rows() != to.size() || G.cols() != from.size()) return false;
  if (!G.nonnegative()) return false;
  const Vector sums = G.column_sums();
  if (!std::all_of(sums.begin(), sums.end(), [](const Rational& s) { return s == 1; })) return false;
  return G * from.p() == to.p() && G * from.g() == to.g();
}

LinearProgram convertibility_program(const ResourceState& from, const ResourceState& to) {
  const std::size_t n = from.size();
  const std::size_t m = to.size();
  LinearProgram lp(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    Vector row(m * n);
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = from.p()[j];
    lp.add_eq(std::move(row), to.p()[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vector row(m * n);
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = from.g()[j];
    lp.add_eq(std::move(row), to.g()[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vector row(m * n);
    for (std::size_t i = 0; i < m; ++i) row[i * n + j] = 1;
    lp.add_eq(std::move(row), 1);
  }
  return lp;
}

Convertibility convertible_lp(const ResourceState& from, const ResourceState& to) {
  const std::size_t n = from.size();
  const std::size_t m = to.size();
  const LpSolution sol = solve(convertibility_program(from, to));
  Convertibility out;
  if (sol.status != LpStatus::Optimal) {
    out.certificate = sol.certificate;
    return out;
  }
  Matrix G(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) G(i, j) = (*sol.point)[i * n + j];
  out.convertible = true;
  out.witness = GibbsStochasticMap{std::move(G)};
  return out;
}

Rational hinge_sum(const ResourceState& r, const Rational& t) {
  Rational s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Rational d = r.ratio(i) - t;
    if (d.sign() > 0) s += r.g()[i] * d;
  }
  return s;
}

Rational abs_deviation_sum(const ResourceState& r, const Rational& t) {
  Rational s;
  for (std::size_t i = 0; i < r.size(); ++i) s += r.g()[i] * (r.ratio(i) - t).abs();
  return s;
}

Vector hinge_breakpoints(const ResourceState& from, const ResourceState& to) {
  Vector ts{0};
  for (std::size_t i = 0; i < from.size(); ++i) ts.push_back(from.ratio(i));
  for (std::size_t i = 0; i < to.size(); ++i) ts.push_back(to.ratio(i));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// Both sides are piecewise linear in t with kinks only at the ratios, equal
// for t <= 0 and (for |.|) asymptotically parallel, so the breakpoints decide.
bool hinge_condition_d(const ResourceState& from, const ResourceState& to) {
  for (const auto& t : hinge_breakpoints(from, to))
    if (hinge_sum(to, t) > hinge_sum(from, t)) return false;
  return true;
}

bool hinge_condition_e(const ResourceState& from, const ResourceState& to) {
  for (const auto& t : hinge_breakpoints(from, to))
    if (abs_deviation_sum(to, t) > abs_deviation_sum(from, t)) return false;
  return true;
}

LorenzPoint two_level_kink(const Rational& boltzmann, const Rational& resource_boltzmann) {
  if (boltzmann.sign() <= 0) throw KinkError("background Boltzmann factor must be positive");
  if (resource_boltzmann.sign() < 0) throw KinkError("resource Boltzmann factor must be non-negative");
  if (boltzmann == resource_boltzmann) throw KinkError("resource is the Gibbs state; its Lorenz curve has no kink");
  const Rational one(1);
  if (resource_boltzmann < boltzmann) {
    // Colder than the background: (1/Z(beta), 1/Z(beta')).
    return {one / (one + boltzmann), one / (one + resource_boltzmann)};
  }
  // Hotter or inverted: levels swap, equivalent to beta -> -beta.
  return {one / (one + one / boltzmann), one / (one + one / resource_boltzmann)};
}

ResourceState two_level_state(const Rational& boltzmann, const Rational& resource_boltzmann) {
  const Rational one(1);
  const Rational z = one + boltzmann;
  const Rational zp = one + resource_boltzmann;
  return make_resource({one / zp, resource_boltzmann / zp}, {one / z, boltzmann / z});
}

}  // namespace thermo
