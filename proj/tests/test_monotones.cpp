#include <doctest.h>

#include <cmath>

#include "support/random_states.hpp"
#include "thermo/monotones.hpp"
#include "thermo/quasiorder.hpp"
#include "thermo/workcost.hpp"

using namespace thermo;

namespace {

const Vector kG{Rational(2, 3), Rational(1, 3)};

double to_double(const Rational& x) { return static_cast<double>(x.to_real()); }
double to_double(const Real& x) { return static_cast<double>(x); }

// Plain double-precision reference formulas.
double ref_kl(const ResourceState& r) {
  double s = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double p = to_double(r.p()[i]), g = to_double(r.g()[i]);
    if (p > 0) s += p * std::log(p / g);
  }
  return s;
}

double ref_reverse_kl(const ResourceState& r) {
  double s = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double p = to_double(r.p()[i]), g = to_double(r.g()[i]);
    if (p == 0) return INFINITY;
    s += g * std::log(g / p);
  }
  return s;
}

double ref_renyi(const ResourceState& r, double a) {
  double s = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double p = to_double(r.p()[i]), g = to_double(r.g()[i]);
    if (p > 0) s += std::pow(p, a) * std::pow(g, 1 - a);
  }
  return std::log(s) / (a - 1);
}

Rational ref_tv(const ResourceState& r) {
  Rational s;
  for (std::size_t i = 0; i < r.size(); ++i) s += (r.p()[i] - r.g()[i]).abs();
  return s;
}

Rational ref_quadratic(const ResourceState& r) {
  Rational s;
  for (std::size_t i = 0; i < r.size(); ++i) s += r.p()[i] * r.p()[i] / r.g()[i];
  return s - 1;
}

}  // namespace

TEST_CASE("named examples") {
  const ResourceState ground = make_resource({1, 0}, kG);
  const ResourceState half = make_resource({Rational(1, 2), Rational(1, 2)}, kG);
  const Real ln32 = boost::multiprecision::log(Real(3) / 2);
  const Real tight("1e-40");

  CHECK(abs(relative_entropy(ground).value - ln32) < tight);
  CHECK(boost::multiprecision::isinf(relative_entropy(ground, true).value));
  CHECK(relative_entropy(ground).name == "D(p||g)");
  CHECK(relative_entropy(ground, true).name == "D(g||p)");
  CHECK(std::abs(to_double(relative_entropy(half).value) - (0.5 * std::log(0.75) + 0.5 * std::log(1.5))) < 1e-14);

  const MonotoneValue d0 = renyi_divergence(ground, 0);
  CHECK(abs(d0.value - ln32) < tight);
  CHECK(abs(d0.value - work_value(ground, 1).work_gain) < tight);
  CHECK(d0.name == "D_0(p||g)");
  CHECK(abs(renyi_divergence(ground, 100).value - ln32) < Real("1e-2"));
  CHECK_THROWS_AS(renyi_divergence(ground, 1), std::invalid_argument);
  CHECK_THROWS_AS(renyi_divergence(ground, -1), std::invalid_argument);

  CHECK(*f_divergence(half, convex::total_variation()).exact == Rational(1, 3));
  CHECK(*f_divergence(ground, convex::quadratic()).exact == Rational(1, 2));
  const ExactConvexFunction linear{"x-1", [](const Rational& x) { return x - 1; }};
  CHECK(*f_divergence(half, linear).exact == 0);

  // Gibbs state: every monotone vanishes.
  for (const auto& v : monotone_family(gibbs_state_of(half))) {
    CAPTURE(v.name);
    CHECK(abs(v.value) < tight);
  }
}

TEST_CASE("agreement with reference formulas") {
  testing::Rng rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const ResourceState r = testing::random_state_between(rng, 1, 6);
    CHECK(*f_divergence(r, convex::total_variation()).exact == ref_tv(r));
    CHECK(*f_divergence(r, convex::quadratic()).exact == ref_quadratic(r));
    CHECK(std::abs(to_double(relative_entropy(r).value) - ref_kl(r)) < 1e-12);
    const double rev = ref_reverse_kl(r);
    if (std::isinf(rev)) {
      CHECK(boost::multiprecision::isinf(relative_entropy(r, true).value));
    } else {
      CHECK(std::abs(to_double(relative_entropy(r, true).value) - rev) < 1e-12);
    }
    for (const Rational a : {Rational(0), Rational(1, 2), Rational(2)}) {
      CHECK(std::abs(to_double(renyi_divergence(r, a).value) - ref_renyi(r, to_double(a))) < 1e-12);
    }
    for (const auto& t : hinge_breakpoints(r, r)) {
      CHECK(*f_divergence(r, convex::hinge(t)).exact == hinge_sum(r, t));
      CHECK(*f_divergence(r, convex::abs_deviation(t)).exact == abs_deviation_sum(r, t));
    }
  }
}

TEST_CASE("non_increasing") {
  const MonotoneValue inf{"a", std::numeric_limits<Real>::infinity(), std::nullopt};
  const MonotoneValue one{"a", Real(1), std::nullopt};
  CHECK(non_increasing(inf, inf, 0));
  CHECK(non_increasing(inf, one, 0));
  CHECK_FALSE(non_increasing(one, inf, 0));
  CHECK(non_increasing(one, MonotoneValue{"a", Real(1) + Real("1e-20"), std::nullopt}, Real("1e-12")));
  CHECK_FALSE(non_increasing(MonotoneValue{"a", Real(1), Rational(1)},
                             MonotoneValue{"a", Real(1), Rational(1) + Rational(1, 1000000)}, Real(1)));
}

TEST_CASE("property: monotones never increase along conversions") {
  testing::Rng rng(61);
  int convertible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto [a, b] = testing::random_pair(rng, 5);
    if (!convertible_lp(a, b).convertible) continue;
    ++convertible;
    const auto before = monotone_family(a);
    const auto after = monotone_family(b);
    for (std::size_t k = 0; k < before.size(); ++k) {
      CAPTURE(before[k].name);
      CHECK(non_increasing(before[k], after[k], Real("1e-30")));
    }
  }
  CHECK(convertible > 50);
}
