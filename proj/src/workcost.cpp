#include "thermo/workcost.hpp"

#include <algorithm>

#include "thermo/linear_program.hpp"
#include "thermo/quasiorder.hpp"

namespace thermo {

namespace {

Real work_from_x(const Rational& x, const Real& beta) {
  Real w = -boost::multiprecision::log(x.to_real()) / beta;
  return w == 0 ? Real(0) : w;  // fold -0
}

void require_positive_beta(const Real& beta) {
  if (!(beta > 0)) throw std::invalid_argument("beta must be positive");
}

}  // namespace

bool is_work_witness(const Matrix& F, const Rational& x, const ResourceState& from, const ResourceState& to) {
  if (F.rows() != to.size() || F.cols() != from.size()) return false;
  if (x.sign() < 0 || !F.nonnegative()) return false;
  if (F * from.p() != to.p()) return false;
  const Vector Fg = F * from.g();
  for (std::size_t i = 0; i < Fg.size(); ++i)
    if (Fg[i] > x * to.g()[i]) return false;
  const Vector sums = F.column_sums();
  return std::all_of(sums.begin(), sums.end(), [](const Rational& s) { return s <= 1; });
}

WorkResult work_gain_lp(const ResourceState& from, const ResourceState& to, const Real& beta) {
  require_positive_beta(beta);
  const std::size_t n = from.size();
  const std::size_t m = to.size();
  // F(i, j) at i * n + j, then x last.
  const std::size_t x_index = m * n;
  LinearProgram lp(m * n + 1);
  lp.objective[x_index] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    Vector row(lp.num_vars);
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = from.p()[j];
    lp.add_eq(std::move(row), to.p()[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vector row(lp.num_vars);
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = from.g()[j];
    row[x_index] = -to.g()[i];
    lp.add_le(std::move(row), 0);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vector row(lp.num_vars);
    for (std::size_t i = 0; i < m; ++i) row[i * n + j] = 1;
    lp.add_le(std::move(row), 1);
  }

  const LpSolution sol = solve(lp);
  // F = p' 1^T with x = max r'_i is always feasible and x >= 0 bounds the objective.
  if (sol.status != LpStatus::Optimal) throw std::logic_error("work LP not optimal: " + std::string(to_string(sol.status)));

  WorkResult out;
  out.x_star = *sol.optimum;
  out.witness_F = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.witness_F(i, j) = (*sol.point)[i * n + j];
  out.beta = beta;
  out.work_gain = work_from_x(out.x_star, beta);
  return out;
}

WorkResult work_value(const ResourceState& r, const Real& beta) {
  require_positive_beta(beta);
  WorkResult out;
  out.witness_F = Matrix(1, r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.p()[i].is_zero()) continue;
    out.x_star += r.g()[i];
    out.witness_F(0, i) = 1;
  }
  out.beta = beta;
  out.work_gain = work_from_x(out.x_star, beta);
  return out;
}

WorkResult work_cost(const ResourceState& r, const Real& beta) {
  require_positive_beta(beta);
  WorkResult out;
  out.witness_F = Matrix(r.size(), 1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    out.x_star = std::max(out.x_star, r.ratio(i));
    out.witness_F(i, 0) = r.p()[i];
  }
  out.beta = beta;
  out.work_gain = work_from_x(out.x_star, beta);
  return out;
}

Rational landauer_cost(int levels) {
  if (levels < 2) throw std::invalid_argument("erasure needs at least 2 levels");
  const auto n = static_cast<std::size_t>(levels);
  // F p = e_1 for every p forces the first row of F to be all ones.
  const Vector uniform(n, Rational(1, levels));
  Matrix F(n, n);
  for (std::size_t j = 0; j < n; ++j) F(0, j) = 1;
  const Vector Fg = F * uniform;
  Rational x;
  for (std::size_t i = 0; i < n; ++i) x = std::max(x, Fg[i] / uniform[i]);
  return x;
}

namespace {

Vector lift_v(const WorkResult& result, const ResourceState& from, const ResourceState& to) {
  Vector v = result.witness_F * from.g();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = result.x_star * to.g()[i] - v[i];
  return v;
}

void require_witness(const WorkResult& result, const ResourceState& from, const ResourceState& to) {
  if (!is_work_witness(result.witness_F, result.x_star, from, to)) {
    throw LiftError("work result is not a feasible (x, F) for these states");
  }
}

}  // namespace

std::optional<Rational> lift_epsilon_max(const WorkResult& result, const ResourceState& from,
                                         const ResourceState& to) {
  require_witness(result, from, to);
  const Rational total = sum(lift_v(result, from, to));
  if (total.is_zero()) return std::nullopt;
  return Rational(1) / total;
}

LiftedMap lift_to_thermal_map(const WorkResult& result, const ResourceState& from, const ResourceState& to,
                              const Rational& epsilon) {
  require_witness(result, from, to);
  if (const auto eps_max = lift_epsilon_max(result, from, to); eps_max && epsilon >= *eps_max) {
    throw LiftError("epsilon " + epsilon.str() + " is at or above the threshold epsilon_max = " + eps_max->str(),
                    *eps_max);
  }
  if (epsilon.sign() <= 0 || epsilon >= 1) throw LiftError("epsilon must lie in (0, 1), got " + epsilon.str());

  const Matrix& F = result.witness_F;
  const std::size_t n = from.size();
  const std::size_t m = to.size();
  const Rational one(1);

  LiftedMap lift;
  lift.epsilon = epsilon;
  lift.v = lift_v(result, from, to);
  lift.u = F.column_sums();
  for (auto& uj : lift.u) uj = one - uj;
  lift.t = one - epsilon * sum(lift.v);
  lift.y = result.x_star / (one + epsilon * (one - result.x_star));

  const Vector ones(n, one);
  const Matrix g11 = Matrix::outer(to.g(), ones);
  const Matrix g12 = Matrix::outer(to.g(), lift.u);
  const Matrix g21 = Matrix::outer(lift.v, ones);
  lift.G = Matrix(2 * m, 2 * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lift.G(i, j) = lift.t * g11(i, j);
      lift.G(i, n + j) = g12(i, j);
      lift.G(m + i, j) = epsilon * g21(i, j);
      lift.G(m + i, n + j) = F(i, j);
    }
  }

  if (!verify_lift(lift, from, to).all()) throw std::logic_error("lifted map failed its own verification");
  return lift;
}

LiftVerification verify_lift(const LiftedMap& lift, const ResourceState& from, const ResourceState& to) {
  const std::size_t n = from.size();
  const std::size_t m = to.size();
  LiftVerification out;
  if (lift.G.rows() != 2 * m || lift.G.cols() != 2 * n) return out;
  const Rational one(1);
  const Rational& eps = lift.epsilon;

  out.nonnegative = lift.G.nonnegative();
  const Vector sums = lift.G.column_sums();
  out.column_sums = std::all_of(sums.begin(), sums.end(), [](const Rational& s) { return s == 1; });

  Vector excited_p(2 * n), excited_p2(2 * m);
  for (std::size_t j = 0; j < n; ++j) excited_p[n + j] = from.p()[j];
  for (std::size_t i = 0; i < m; ++i) excited_p2[m + i] = to.p()[i];
  out.resource_action = lift.G * excited_p == excited_p2;

  const Rational z_ratio = (one + eps) / (one + eps * lift.y);
  Vector joint_g(2 * n), target(2 * m);
  for (std::size_t j = 0; j < n; ++j) {
    joint_g[j] = from.g()[j];
    joint_g[n + j] = eps * from.g()[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    target[i] = z_ratio * to.g()[i];
    target[m + i] = z_ratio * lift.y * eps * to.g()[i];
  }
  out.gibbs_action = lift.G * joint_g == target;

  out.z_identity = lift.u.size() == n && lift.t + eps * dot(lift.u, from.g()) == z_ratio;
  return out;
}

bool work_gain_consistency(const ResourceState& from, const ResourceState& to) {
  const Real beta = 1;
  const ResourceState trivial = trivial_resource();
  const WorkResult forward = work_gain_lp(from, to, beta);
  if (convertible_lp(from, to).convertible != (forward.x_star <= 1)) return false;
  for (const ResourceState* r : {&from, &to}) {
    if (work_gain_lp(*r, trivial, beta).x_star != work_value(*r, beta).x_star) return false;
    if (work_gain_lp(trivial, *r, beta).x_star != work_cost(*r, beta).x_star) return false;
  }
  return true;
}

}  // namespace thermo
